"""Numerical semigroups with cached invariants.

A numerical semigroup is a subset of the nonnegative integers containing 0,
closed under addition, whose complement (the set of *gaps*) is finite.  The
largest gap is the Frobenius number F, the number of gaps is the genus g,
the smallest nonzero member is the multiplicity m, and the unique minimal
generating set has size e (the embedding dimension).

Membership is stored as an integer bitmask over the window [0, F + 1]; every
integer above the Frobenius number is implicitly a member, so the mask plus
F determines the semigroup completely.  Instances are immutable and safe to
share between threads or processes.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import EmptyGenerators, GcdNotOne, NotAMember, NotEffective


class Strength(Enum):
    """Classification of a minimal generator relative to the tree descent."""

    STRONG = "strong"
    WEAK = "weak"
    NOT_EFFECTIVE = "not-effective"


@dataclass(frozen=True)
class GeneratorTag:
    """A minimal generator together with its descent classification.

    ``effective`` is true exactly when the value exceeds the Frobenius
    number, i.e. when removing it yields a child semigroup.  ``strength``
    is STRONG or WEAK for effective generators and NOT_EFFECTIVE otherwise.
    """

    value: int
    effective: bool
    strength: Strength

    def __post_init__(self):
        if self.effective != (self.strength is not Strength.NOT_EFFECTIVE):
            raise ValueError("strength tag inconsistent with effectiveness")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts read off a semigroup's lattice path."""

    parts: tuple[int, ...]

    def __post_init__(self):
        ps = self.parts
        if any(p <= 0 for p in ps):
            raise ValueError("partition parts must be positive")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class NumericalSemigroup:
    """An immutable numerical semigroup.

    Use :func:`from_generators`, :func:`from_gaps`, or :func:`ordinary` to
    build instances; the constructor itself expects a validated gap tuple.
    """

    __slots__ = ("_mask", "frobenius", "multiplicity", "genus", "min_generators")

    _mask: int
    frobenius: int
    multiplicity: int
    genus: int
    min_generators: tuple[int, ...]

    def __init__(self, gaps: Iterable[int]):
        gap_list = sorted(set(gaps))
        if any(not isinstance(x, int) or x < 1 for x in gap_list):
            raise ValueError("gaps must be positive integers")
        frob = gap_list[-1] if gap_list else -1
        mask = (1 << (frob + 2)) - 1
        for x in gap_list:
            mask ^= 1 << x
        # Closure of the complement: no two nonzero members may sum to a gap.
        nonzero = mask & -2
        gap_mask = ((1 << (frob + 2)) - 1) & ~mask
        for u in _bits(nonzero):
            if 2 * u > frob:
                break
            if (nonzero << u) & gap_mask:
                raise ValueError("complement is not closed under addition")
        object.__setattr__(self, "_mask", mask)
        object.__setattr__(self, "frobenius", frob)
        object.__setattr__(self, "genus", len(gap_list))
        mult = 1
        while not (mask >> mult) & 1 and mult <= frob:
            mult += 1
        object.__setattr__(self, "multiplicity", mult)
        object.__setattr__(self, "min_generators", self._minimal_generators())

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup instances are immutable")

    # -- membership ------------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool((self._mask >> x) & 1)

    def members(self, upto: int) -> list[int]:
        """All members in [0, upto]."""
        return [x for x in range(upto + 1) if x in self]

    def gaps(self) -> tuple[int, ...]:
        f = self.frobenius
        window = (1 << (f + 2)) - 1
        return tuple(_bits(window & ~self._mask))

    # -- invariants ------------------------------------------------------

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    def is_ordinary(self) -> bool:
        """True for {0} followed by every integer above the genus (and for N0)."""
        return self.multiplicity > self.frobenius

    def _minimal_generators(self) -> tuple[int, ...]:
        # A member is a minimal generator iff it is not the sum of two
        # nonzero members.  Minimal generators lie in [m, F + m].
        f = self.frobenius
        m = self.multiplicity
        limit = max(m, f + m)
        ext = self._mask | (((1 << (limit + 1)) - (1 << (f + 1))) if limit > f else 0)
        nonzero = ext & -2
        sums = 0
        for u in _bits(nonzero):
            if 2 * u > limit:
                break
            sums |= nonzero << u
        window = (1 << (limit + 1)) - 1
        return tuple(_bits(nonzero & ~sums & window))

    def apery_set(self, n: int | None = None) -> list[int]:
        """Least member in each residue class mod ``n`` (default multiplicity).

        Entry ``i`` is the smallest member congruent to ``i`` mod ``n``;
        entry 0 is 0.  Raises :class:`NotAMember` unless ``n`` is a positive
        member.
        """
        if n is None:
            n = self.multiplicity
        if n < 1 or n not in self:
            raise NotAMember(f"{n} is not a positive member")
        out = [0] * n
        for i in range(1, n):
            x = i
            while x not in self:
                x += n
            out[i] = x
        return out

    # -- tree-facing operations ------------------------------------------

    def effective_generators(self) -> list[GeneratorTag]:
        """Tag every minimal generator with its descent classification.

        A generator is effective when it exceeds the Frobenius number.  An
        effective generator lam is strong when m + lam turns up as a minimal
        generator of the child obtained by removing lam.
        """
        f = self.frobenius
        m = self.multiplicity
        tags = []
        for lam in self.min_generators:
            if lam <= f:
                tags.append(GeneratorTag(lam, False, Strength.NOT_EFFECTIVE))
                continue
            child = self.remove_generator(lam)
            strong = (m + lam) in child.min_generators
            tags.append(
                GeneratorTag(lam, True, Strength.STRONG if strong else Strength.WEAK)
            )
        return tags

    @property
    def efficacy(self) -> int:
        """Number of effective generators, i.e. number of children."""
        f = self.frobenius
        return sum(1 for lam in self.min_generators if lam > f)

    def remove_generator(self, lam: int) -> "NumericalSemigroup":
        """Child semigroup obtained by deleting an effective generator."""
        if lam <= self.frobenius or lam not in self.min_generators:
            raise NotEffective(f"{lam} is not an effective generator")
        return NumericalSemigroup(self.gaps() + (lam,))

    # -- weight data -------------------------------------------------------

    def weight_data(self) -> tuple[int, int, Partition]:
        """Return (weight, effective weight, lattice-path partition).

        weight    = sum of (l_i - i) over the sorted gaps l_1 < ... < l_g.
        ewt       = sum over gaps of the number of minimal generators below
                    that gap.
        partition = row lengths of the region cut out by the membership path
                    on [0, 2g]; its size is always weight + genus.
        """
        gap_list = self.gaps()
        weight = sum(l - i for i, l in enumerate(gap_list, start=1))
        gens = self.min_generators
        ewt = sum(bisect_left(gens, l) for l in gap_list)
        parts = tuple(l - i for i, l in zip(range(len(gap_list) - 1, -1, -1),
                                            reversed(gap_list)))
        return weight, ewt, Partition(parts)

    @property
    def weight(self) -> int:
        return self.weight_data()[0]

    @property
    def effective_weight(self) -> int:
        return self.weight_data()[1]

    # -- interchange -------------------------------------------------------

    def to_record(self) -> dict:
        """JSON-ready record with a fixed field order."""
        m = self.multiplicity
        if m >= 2:
            ap = self.apery_set(m)
            kunz = [(ap[i] - i) // m for i in range(1, m)]
        else:
            kunz = []
        weight, ewt, _ = self.weight_data()
        return {
            "generators": list(self.min_generators),
            "multiplicity": m,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "gaps": list(self.gaps()),
            "efficacy": self.efficacy,
            "weight": weight,
            "ewt": ewt,
            "kunz": kunz,
        }

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.frobenius == other.frobenius and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self.frobenius, self._mask))

    def __repr__(self) -> str:
        gens = ",".join(str(n) for n in self.min_generators)
        return f"NumericalSemigroup(<{gens}>)"


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Build a semigroup from its exact gap set, validating closure."""
    return NumericalSemigroup(gaps)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The semigroup of all nonnegative combinations of ``gens``.

    Raises :class:`EmptyGenerators` on an empty set and :class:`GcdNotOne`
    when the generators have a common factor (the complement would be
    infinite).
    """
    gen_list = sorted(set(gens))
    if not gen_list:
        raise EmptyGenerators("need at least one generator")
    if any(not isinstance(n, int) or n < 1 for n in gen_list):
        raise ValueError("generators must be positive integers")
    if math.gcd(*gen_list) != 1:
        raise GcdNotOne(f"gcd of {gen_list} is {math.gcd(*gen_list)}")
    if gen_list[0] == 1:
        return NumericalSemigroup(())
    m = gen_list[0]
    top = gen_list[-1]
    width = 2 * top + 2
    while True:
        window = (1 << (width + 1)) - 1
        mask = 1
        # Saturate the reachable set within the window.
        while True:
            grown = mask
            for n in gen_list:
                grown |= (grown << n) & window
            if grown == mask:
                break
            mask = grown
        # A run of m consecutive members marks the end of the gaps.
        run = mask
        for i in range(1, m):
            run &= mask >> i
        if run:
            start = (run & -run).bit_length() - 1
            zeros = ~mask & ((1 << start) - 1)
            gap_tuple = tuple(_bits(zeros))
            return NumericalSemigroup(gap_tuple)
        width *= 2


def ordinary(g: int) -> NumericalSemigroup:
    """The ordinary semigroup of genus g: zero plus every integer above g."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return NumericalSemigroup(range(1, g + 1))
