"""Shared fixtures: census tables reused across test modules."""

import pytest

from sgforge import enumerate_tree


@pytest.fixture(scope="session")
def census16():
    return enumerate_tree(16)


@pytest.fixture(scope="session")
def census22():
    return enumerate_tree(22)
