"""Semigroup construction, invariants, and per-semigroup operations."""

import math

import pytest

import sgforge as sf
from sgforge.errors import (EmptyGenerators, GcdNotOne, NotAMember,
                            NotEffective)


def all_semigroups(g_max):
    """Every semigroup of genus <= g_max, via the tree walk's gap sets."""
    class Harvest:
        def __init__(self):
            self.gapsets = []

        def visit(self, frame):
            self.gapsets.append(frame.gap_tuple())

        def merge(self, other):
            self.gapsets.extend(other.gapsets)
            return self

    table = sf.enumerate_tree(g_max, collectors={"harvest": Harvest})
    return [sf.from_gaps(gaps) for gaps in table.extras["harvest"].gapsets]


class TestFromGenerators:
    def test_two_three(self):
        s = sf.from_generators({2, 3})
        assert s.gaps() == (1,)
        assert s.frobenius == 1
        assert s.genus == 1
        assert s.min_generators == (2, 3)

    def test_unit_generator_gives_trivial_semigroup(self):
        s = sf.from_generators({1})
        assert s.frobenius == -1
        assert s.genus == 0
        assert s.min_generators == (1,)
        assert 0 in s and 5 in s

    def test_three_five(self):
        s = sf.from_generators({3, 5})
        assert s.frobenius == 7
        assert s.genus == 4
        assert s.gaps() == (1, 2, 4, 7)

    def test_gcd_not_one(self):
        with pytest.raises(GcdNotOne):
            sf.from_generators({2, 4})

    def test_empty(self):
        with pytest.raises(EmptyGenerators):
            sf.from_generators(set())

    def test_redundant_generators_reduce(self):
        s = sf.from_generators({4, 6, 9, 10, 13})
        assert s == sf.from_generators({4, 6, 9})
        assert s.min_generators == (4, 6, 9)

    def test_large_two_generator(self):
        # Window growth: Frobenius number far beyond 2 * max(gens).
        s = sf.from_generators({11, 13})
        assert s.frobenius == 11 * 13 - 11 - 13
        assert s.genus == 10 * 12 // 2

    def test_membership_closure_on_window(self):
        s = sf.from_generators({4, 7, 9})
        members = s.members(60)
        member_set = set(members)
        for u in members:
            for v in members:
                if 0 < u and 0 < v and u + v <= 60:
                    assert u + v in member_set


class TestFromGaps:
    def test_round_trip(self):
        s = sf.from_gaps((1, 2, 4, 7))
        assert s == sf.from_generators({3, 5})

    def test_rejects_non_coideal(self):
        # 2 and 3 would be members, but 2 + 2 = 4 is listed as a gap.
        with pytest.raises(ValueError):
            sf.from_gaps((1, 4))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            sf.from_gaps((0, 1))


class TestAperySet:
    def test_three_five(self):
        s = sf.from_generators({3, 5})
        assert s.apery_set(3) == [0, 10, 5]

    def test_trivial(self):
        assert sf.from_generators({1}).apery_set(1) == [0]

    def test_four_six_nine(self):
        s = sf.from_generators({4, 6, 9})
        assert s.apery_set(4) == [0, 9, 6, 15]

    def test_two_generator_form(self):
        # Ap(a, <a,b>) = {0, b, 2b, ..., (a-1) b}
        for a, b in [(3, 5), (4, 7), (5, 6)]:
            s = sf.from_generators({a, b})
            assert sorted(s.apery_set(a)) == sorted(i * b for i in range(a))

    def test_errors(self):
        s = sf.from_generators({3, 5})
        with pytest.raises(NotAMember):
            s.apery_set(4)
        with pytest.raises(NotAMember):
            s.apery_set(0)

    def test_selmer_and_genus_postconditions(self):
        # max Ap(m) - m = F, and the per-residue quotients sum to the genus.
        for s in all_semigroups(8):
            m = s.multiplicity
            ap = s.apery_set(m)
            if m >= 2:
                assert max(ap) - m == s.frobenius
            assert sum(a // m for a in ap) == s.genus

    def test_quotient_sum_for_any_member(self):
        s = sf.from_generators({3, 5})
        for n in (3, 5, 6, 8):
            ap = s.apery_set(n)
            assert sum(a // n for a in ap) == s.genus


class TestMinimalGenerators:
    def test_apery_reduction_agrees(self):
        # Independent route: m plus the nonzero Apéry elements that are not
        # sums of two nonzero Apéry elements.
        for s in all_semigroups(9):
            m = s.multiplicity
            if m == 1:
                continue
            ap = set(s.apery_set(m)) - {0}
            sums = {a + b for a in ap for b in ap}
            expected = tuple(sorted({m} | {a for a in ap if a not in sums}))
            assert expected == s.min_generators

    def test_gcd_is_one(self):
        for s in all_semigroups(8):
            assert math.gcd(*s.min_generators) == 1

    def test_embedding_dimension_at_most_multiplicity(self):
        for s in all_semigroups(9):
            assert s.embedding_dimension <= s.multiplicity

    def test_regeneration(self):
        for s in all_semigroups(9):
            assert sf.from_generators(s.min_generators) == s


class TestEffectiveGenerators:
    def test_ordinary_efficacy(self):
        assert sf.ordinary(3).efficacy == 4
        assert sf.ordinary(5).efficacy == 6
        tags = sf.ordinary(3).effective_generators()
        assert [t.value for t in tags] == [4, 5, 6, 7]
        assert all(t.effective for t in tags)

    def test_three_four_has_none(self):
        s = sf.from_generators({3, 4})
        assert s.efficacy == 0
        assert all(t.strength is sf.Strength.NOT_EFFECTIVE
                   for t in s.effective_generators())

    def test_two_three_both_strong(self):
        tags = sf.from_generators({2, 3}).effective_generators()
        assert [(t.value, t.strength) for t in tags] == [
            (2, sf.Strength.STRONG),
            (3, sf.Strength.STRONG),
        ]

    def test_weak_example(self):
        # In <3,5,7>, removing 7 leaves <3,5>, where 3 + 7 = 10 = 5 + 5.
        s = sf.from_generators({3, 5, 7})
        by_value = {t.value: t.strength for t in s.effective_generators()}
        assert by_value[7] is sf.Strength.WEAK
        assert by_value[5] is sf.Strength.STRONG


class TestRemoveGenerator:
    def test_examples(self):
        assert sf.from_generators({2, 3}).remove_generator(2) == \
            sf.from_generators({3, 4, 5})
        assert sf.from_generators({2, 5}).remove_generator(5) == \
            sf.from_generators({2, 7})

    def test_not_effective(self):
        with pytest.raises(NotEffective):
            sf.from_generators({3, 4}).remove_generator(3)
        with pytest.raises(NotEffective):
            sf.from_generators({2, 3}).remove_generator(4)

    def test_child_invariants(self):
        for s in all_semigroups(8):
            for tag in s.effective_generators():
                if not tag.effective:
                    continue
                child = s.remove_generator(tag.value)
                assert child.genus == s.genus + 1
                assert child.frobenius == tag.value


class TestSylvesterAndSymmetry:
    def test_sylvester_invariant(self):
        for a in range(2, 13):
            for b in range(a + 1, 13):
                if math.gcd(a, b) != 1:
                    continue
                s = sf.from_generators({a, b})
                assert s.frobenius == a * b - a - b
                assert s.genus == (a - 1) * (b - 1) // 2

    def test_two_generator_symmetry(self):
        for a, b in [(2, 3), (3, 5), (4, 7), (5, 8), (7, 9)]:
            s = sf.from_generators({a, b})
            f = s.frobenius
            for x in range(f + 1):
                assert (x in s) != (f - x in s)


class TestWeightData:
    def test_ordinary_is_flat(self):
        for g in (0, 1, 4, 9):
            weight, ewt, part = sf.ordinary(g).weight_data()
            assert weight == 0
            assert ewt == 0
            assert part.parts == (1,) * g

    def test_three_four(self):
        # gaps {1, 2, 5}: weight 2, both generators below the top gap.
        weight, ewt, part = sf.from_generators({3, 4}).weight_data()
        assert weight == 2
        assert ewt == 2
        assert part.parts == (3, 1, 1)
        assert part.size == weight + 3

    def test_hyperelliptic_effective_weight(self):
        for g in range(1, 11):
            s = sf.from_generators({2, 2 * g + 1})
            weight, ewt, part = s.weight_data()
            assert ewt == g - 1
            assert part.size == weight + g

    def test_partition_size_identity(self):
        for s in all_semigroups(10):
            weight, _ewt, part = s.weight_data()
            assert part.size == weight + s.genus
            assert all(part.parts[i] >= part.parts[i + 1]
                       for i in range(len(part.parts) - 1))

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            sf.Partition((1, 2))
        with pytest.raises(ValueError):
            sf.Partition((2, 0))


class TestOrdinary:
    def test_zero_is_trivial(self):
        assert sf.ordinary(0) == sf.from_generators({1})

    def test_three(self):
        s = sf.ordinary(3)
        assert s.frobenius == 3
        assert s.min_generators == (4, 5, 6, 7)

    def test_frobenius_is_genus(self):
        for g in range(1, 12):
            s = sf.ordinary(g)
            assert s.frobenius == g
            assert s.genus == g
            assert s.efficacy == g + 1


class TestRecordAndDunder:
    def test_record_field_order(self):
        rec = sf.from_generators({2, 5}).to_record()
        assert list(rec) == ["generators", "multiplicity", "frobenius",
                             "genus", "gaps", "efficacy", "weight", "ewt",
                             "kunz"]
        assert rec["kunz"] == [2]
        assert rec["genus"] == 2

    def test_trivial_record_has_empty_kunz(self):
        assert sf.from_generators({1}).to_record()["kunz"] == []

    def test_immutable(self):
        s = sf.from_generators({2, 3})
        with pytest.raises(AttributeError):
            s.genus = 7

    def test_eq_hash(self):
        a = sf.from_generators({3, 5})
        b = sf.from_gaps((1, 2, 4, 7))
        assert a == b
        assert hash(a) == hash(b)
        assert a != sf.from_generators({2, 5})

    def test_genus_counts_gaps_below_frobenius(self):
        for s in all_semigroups(9):
            f = s.frobenius
            assert s.genus == sum(1 for x in range(1, f + 1) if x not in s)
            if s.genus:
                assert s.multiplicity == min(x for x in s.members(f + 1) if x)
