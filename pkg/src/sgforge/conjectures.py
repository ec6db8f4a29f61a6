"""Finite-range verification of the census identities, inequalities, and
conjectures that are checkable at desk scale.

Each sweep returns a :class:`VerificationReport`; an empty violation list
means the property held everywhere on the swept range.  Witnesses carry
enough of the offending semigroup (its gap set) to re-verify standalone.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass, field
from functools import partial

from .core import NumericalSemigroup, _bits
from .errors import AlreadyOrdinary, IncompleteCensus
from .formulas import fibonacci, zhao_lower_bound
from .kunz import count_by_polytope, recurrence_bijection_check
from .tree import CensusTable, Descent, TreeFrame, enumerate_tree

PHI = (1 + math.sqrt(5)) / 2
GAMMA = (5 + math.sqrt(5)) / 10


@dataclass
class VerificationReport:
    """Outcome of one named sweep over a parameter range."""

    name: str
    params: dict
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "ok": self.ok,
            "violations": self.violations,
            "stats": self.stats,
        }


# ---------------------------------------------------------------------------
# Wilf's inequality

WilfCheck = namedtuple("WilfCheck", "holds f_plus_1 n e")


def check_wilf(sg: NumericalSemigroup) -> WilfCheck:
    """Evaluate F + 1 <= n * e with n = |S ∩ [0, F]| counted directly."""
    f = sg.frobenius
    if f < 0:
        return WilfCheck(True, 0, 0, sg.embedding_dimension)
    n = (sg._mask & ((1 << (f + 1)) - 1)).bit_count()
    e = sg.embedding_dimension
    return WilfCheck(f + 1 <= n * e, f + 1, n, e)


def wilf_sweep(g_max: int = 30, *, split_depth: int = 0, workers: int = 1,
               census: CensusTable | None = None) -> VerificationReport:
    """Wilf's inequality over every semigroup of genus <= g_max.

    The walk checks F + 1 <= (F + 1 - g) * e inline; gap sets of any
    violators are reported as witnesses.
    """
    if census is None or census.g_max < g_max:
        census = enumerate_tree(g_max, split_depth=split_depth, workers=workers)
    violations = [
        {"gaps": list(gaps),
         "generators": list(NumericalSemigroup(gaps).min_generators)}
        for gaps in census.wilf_witnesses
    ]
    per_genus = {g: c for g, c in enumerate(census.wilf_violations[: g_max + 1]) if c}
    if per_genus and not violations:
        violations.append({"per_genus_counts": per_genus})
    return VerificationReport(
        "wilf", {"g_max": g_max}, violations,
        {"checked": sum(census.n_of_g[: g_max + 1]),
         "rows": [(g, census.wilf_violations[g]) for g in range(g_max + 1)]},
    )


# ---------------------------------------------------------------------------
# The exact second-order census identity

YeCheck = namedtuple("YeCheck", "holds lhs rhs")


def ye_identity(g: int, census: CensusTable) -> YeCheck:
    """N(g+2) against N(g+1) - N(g) + S(g+1) + 1 + sum of (h-1)(h-2)/2.

    The correction sum runs over genus-g nodes; evaluated as a polynomial it
    contributes 1 for each childless node.  Requires the census to reach
    genus g + 2.
    """
    if g < 0:
        raise ValueError("g must be nonnegative")
    if census.g_max < g + 2:
        raise IncompleteCensus(f"need genus {g + 2}, table stops at {census.g_max}")
    lhs = census.n(g + 2)
    rhs = census.n(g + 1) - census.n(g) + census.s(g + 1) + 1 + census.ye_correction[g]
    return YeCheck(lhs == rhs, lhs, rhs)


def ye_sweep(g_max: int = 20, *, census: CensusTable | None = None,
             workers: int = 1, split_depth: int = 0) -> VerificationReport:
    """Identity plus its corollary N(g+2) >= N(g+1) - N(g) for g <= g_max."""
    if census is None or census.g_max < g_max + 2:
        census = enumerate_tree(g_max + 2, split_depth=split_depth, workers=workers)
    violations = []
    for g in range(g_max + 1):
        res = ye_identity(g, census)
        if not res.holds:
            violations.append({"g": g, "lhs": res.lhs, "rhs": res.rhs})
        if census.n(g + 2) < census.n(g + 1) - census.n(g):
            violations.append({"g": g, "corollary": "N(g+2) >= N(g+1) - N(g)"})
    return VerificationReport("ye", {"g_max": g_max}, violations,
                              {"checked": g_max + 1})


# ---------------------------------------------------------------------------
# Strongly descended classes and the geometric-sum inequality

class StrongClassCollector:
    """Genus and efficacy of every strongly descended node, keyed by (m, F)."""

    def __init__(self):
        self.classes: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def visit(self, frame: TreeFrame) -> None:
        if frame.descent is Descent.WEAK or frame.frobenius < 1:
            return
        key = (frame.multiplicity, frame.frobenius)
        self.classes.setdefault(key, []).append((frame.genus, frame.efficacy))

    def merge(self, other: "StrongClassCollector") -> "StrongClassCollector":
        for key, pairs in other.classes.items():
            self.classes.setdefault(key, []).extend(pairs)
        return self


ZhaiCheck = namedtuple("ZhaiCheck", "holds lhs rhs")


def zhai_lemma_check(m: int, frob: int,
                     classes: dict[tuple[int, int], list[tuple[int, int]]]) -> ZhaiCheck:
    """Sum of phi^-(g - h) over strongly descended nodes with multiplicity m
    and Frobenius number F, against 5 (F - m + 2) (1.618 / phi)^(F - m - 1).

    The right side keeps the literal 1.618 (strictly below phi); comparison
    tolerance 1e-9.  An empty class holds trivially.
    """
    lhs = sum(PHI ** (h - g) for g, h in classes.get((m, frob), ()))
    rhs = 5 * (frob - m + 2) * (1.618 / PHI) ** (frob - m - 1)
    return ZhaiCheck(lhs <= rhs + 1e-9, lhs, rhs)


def zhai_sweep(f_max: int = 20) -> VerificationReport:
    """All (m, F) classes with m < F <= f_max and F not a multiple of m."""
    table = enumerate_tree(f_max, frobenius_max=f_max,
                           collectors={"strong": StrongClassCollector})
    classes = table.extras["strong"].classes
    violations = []
    checked = 0
    for frob in range(2, f_max + 1):
        for m in range(2, frob):
            if frob % m == 0:
                continue
            checked += 1
            res = zhai_lemma_check(m, frob, classes)
            if not res.holds:
                violations.append({"m": m, "F": frob,
                                   "lhs": res.lhs, "rhs": res.rhs})
    return VerificationReport("zhai-lemma", {"f_max": f_max}, violations,
                              {"cells": checked})


# ---------------------------------------------------------------------------
# Ordinarization

def ordinarize(sg: NumericalSemigroup) -> NumericalSemigroup:
    """Swap the multiplicity out for the Frobenius number.

    Preserves the genus and strictly increases the multiplicity; undefined
    (AlreadyOrdinary) on ordinary semigroups, where there is nothing to swap.
    """
    if sg.is_ordinary():
        raise AlreadyOrdinary(repr(sg))
    gaps = set(sg.gaps())
    gaps.discard(sg.frobenius)
    gaps.add(sg.multiplicity)
    return NumericalSemigroup(gaps)


def ordinarization_number(sg: NumericalSemigroup) -> int:
    """Steps of the transform needed to reach the ordinary semigroup."""
    return _ordinarization_steps(sg.gaps())


def _ordinarization_steps(gap_tuple: tuple[int, ...]) -> int:
    gaps = list(gap_tuple)
    g = len(gaps)
    steps = 0
    while gaps and gaps[-1] != g:
        # Multiplicity = least positive integer missing from the gap list.
        i = 0
        while i < g and gaps[i] == i + 1:
            i += 1
        gaps = gaps[:i] + [i + 1] + gaps[i:-1]
        steps += 1
    return steps


class OrdinarizationCollector:
    """Counts of semigroups by (genus, ordinarization number)."""

    def __init__(self):
        self.counts: dict[tuple[int, int], int] = {}

    def visit(self, frame: TreeFrame) -> None:
        key = (frame.genus, _ordinarization_steps(frame.gap_tuple()))
        self.counts[key] = self.counts.get(key, 0) + 1

    def merge(self, other: "OrdinarizationCollector") -> "OrdinarizationCollector":
        for key, c in other.counts.items():
            self.counts[key] = self.counts.get(key, 0) + c
        return self


def ordinarization_census(g_max: int, *, split_depth: int = 0,
                          workers: int = 1) -> dict[tuple[int, int], int]:
    """n(g, r) for every g <= g_max: semigroups of genus g needing r steps."""
    table = enumerate_tree(g_max, split_depth=split_depth, workers=workers,
                           collectors={"ordinarization": OrdinarizationCollector})
    return dict(table.extras["ordinarization"].counts)


def ordinarization_sweep(g_max: int = 18, **kwargs) -> VerificationReport:
    """Level sums, the single root per level, and n(g, r) <= n(g+1, r).

    The monotonicity cells cover g < g_max (each needs the next level).
    """
    counts = ordinarization_census(g_max, **kwargs)
    n_of_g = [0] * (g_max + 1)
    for (g, _r), c in counts.items():
        n_of_g[g] += c
    violations = []
    for g in range(g_max + 1):
        if counts.get((g, 0), 0) != 1:
            violations.append({"g": g, "issue": "root count != 1",
                               "count": counts.get((g, 0), 0)})
    r_max = max(r for (_g, r) in counts)
    for g in range(g_max):
        for r in range(r_max + 1):
            if counts.get((g, r), 0) > counts.get((g + 1, r), 0):
                violations.append({"g": g, "r": r,
                                   "n_g_r": counts.get((g, r), 0),
                                   "n_g1_r": counts.get((g + 1, r), 0)})
    return VerificationReport(
        "ordinarization", {"g_max": g_max}, violations,
        {"levels": {g: n_of_g[g] for g in range(g_max + 1)}, "r_max": r_max,
         "rows": [(g, r, c) for (g, r), c in sorted(counts.items())]},
    )


# ---------------------------------------------------------------------------
# Gap-sumset (Weierstrass necessary) criterion

def gap_sumset_size(gaps: tuple[int, ...]) -> int:
    """|L + L| for the gap set L, by shifted-bitmask union."""
    amask = 0
    for x in gaps:
        amask |= 1 << x
    sums = 0
    for x in gaps:
        sums |= amask << x
    return sums.bit_count()


def buchweitz_check(sg: NumericalSemigroup) -> bool:
    """True when |L + L| <= 3 (g - 1) for the gap set L; genus >= 2 only.

    Failing the bound certifies the semigroup cannot arise from pole orders
    at a point of a smooth curve.
    """
    g = sg.genus
    if g < 2:
        raise ValueError("criterion needs genus >= 2")
    return gap_sumset_size(sg.gaps()) <= 3 * (g - 1)


class BuchweitzCollector:
    """Per-genus totals and failures of the 2-fold sumset bound."""

    def __init__(self):
        self.failures: dict[int, int] = {}
        self.totals: dict[int, int] = {}
        self.witnesses: list[tuple[int, ...]] = []

    def visit(self, frame: TreeFrame) -> None:
        g = frame.genus
        if g < 2:
            return
        self.totals[g] = self.totals.get(g, 0) + 1
        gaps = frame.gap_tuple()
        if gap_sumset_size(gaps) > 3 * (g - 1):
            self.failures[g] = self.failures.get(g, 0) + 1
            if len(self.witnesses) < 20:
                self.witnesses.append(gaps)

    def merge(self, other: "BuchweitzCollector") -> "BuchweitzCollector":
        for g, c in other.totals.items():
            self.totals[g] = self.totals.get(g, 0) + c
        for g, c in other.failures.items():
            self.failures[g] = self.failures.get(g, 0) + c
        self.witnesses = (self.witnesses + other.witnesses)[:20]
        return self


def buchweitz_sweep(g_max: int = 16, *, split_depth: int = 0,
                    workers: int = 1) -> VerificationReport:
    """Count criterion failures per genus (they are data, not violations).

    The report's violation list stays empty; failure counts and the first
    failing gap sets appear in the stats.
    """
    table = enumerate_tree(g_max, split_depth=split_depth, workers=workers,
                           collectors={"buchweitz": BuchweitzCollector})
    coll = table.extras["buchweitz"]
    first_failure = min(coll.failures) if coll.failures else None
    return VerificationReport(
        "buchweitz", {"g_max": g_max}, [],
        {
            "failures": {g: coll.failures[g] for g in sorted(coll.failures)},
            "totals": {g: coll.totals[g] for g in sorted(coll.totals)},
            "first_failure_genus": first_failure,
            "witnesses": [list(w) for w in coll.witnesses[:5]],
        },
    )


# ---------------------------------------------------------------------------
# Effective-weight bound

class EwtMaxCollector:
    """Maximum effective weight per genus, with a witness gap set."""

    def __init__(self):
        self.max_by_genus: dict[int, int] = {}
        self.argmax: dict[int, tuple[int, ...]] = {}

    def visit(self, frame: TreeFrame) -> None:
        f = frame.frobenius
        if f < 1:
            return
        window = (1 << (f + 1)) - 2
        gap_mask = window & ~frame.mask
        g = frame.genus
        ewt = 0
        for n in _bits(frame.min_generator_mask):
            if n >= f:
                break
            ewt += g - (gap_mask & ((1 << (n + 1)) - 1)).bit_count()
        if ewt > self.max_by_genus.get(g, -1):
            self.max_by_genus[g] = ewt
            self.argmax[g] = frame.gap_tuple()

    def merge(self, other: "EwtMaxCollector") -> "EwtMaxCollector":
        for g, v in other.max_by_genus.items():
            if v > self.max_by_genus.get(g, -1):
                self.max_by_genus[g] = v
                self.argmax[g] = other.argmax[g]
        return self


def pflueger_bound(g: int) -> int:
    return (g + 1) ** 2 // 8


def pflueger_sweep(g_max: int = 25, *, split_depth: int = 0,
                   workers: int = 1) -> VerificationReport:
    """Effective weight against floor((g+1)^2 / 8) for every genus <= g_max."""
    table = enumerate_tree(g_max, split_depth=split_depth, workers=workers,
                           collectors={"ewt": EwtMaxCollector})
    coll = table.extras["ewt"]
    violations = []
    rows = []
    for g in range(1, g_max + 1):
        bound = pflueger_bound(g)
        observed = coll.max_by_genus.get(g, 0)
        rows.append((g, observed, bound))
        if observed > bound:
            gaps = coll.argmax[g]
            violations.append({"g": g, "max_ewt": observed, "bound": bound,
                               "gaps": list(gaps),
                               "generators":
                               list(NumericalSemigroup(gaps).min_generators)})
    return VerificationReport("pflueger", {"g_max": g_max}, violations,
                              {"rows": rows})


# ---------------------------------------------------------------------------
# Concentration of F/m and m/g

class ConcentrationCollector:
    """Per-genus counts of three typicality windows.

    a_band:   (2 - eps) m < F < (2 + eps) m
    m_band:   (gamma - eps) g < m < (gamma + eps) g, gamma = (5 + sqrt 5)/10
    two_g_lt_3m: 2g < 3m
    """

    def __init__(self, eps: float):
        self.eps = eps
        self.total: dict[int, int] = {}
        self.a_band: dict[int, int] = {}
        self.m_band: dict[int, int] = {}
        self.two_g_lt_3m: dict[int, int] = {}

    def visit(self, frame: TreeFrame) -> None:
        g = frame.genus
        m = frame.multiplicity
        f = frame.frobenius
        eps = self.eps
        self.total[g] = self.total.get(g, 0) + 1
        if (2 - eps) * m < f < (2 + eps) * m:
            self.a_band[g] = self.a_band.get(g, 0) + 1
        if (GAMMA - eps) * g < m < (GAMMA + eps) * g:
            self.m_band[g] = self.m_band.get(g, 0) + 1
        if 2 * g < 3 * m:
            self.two_g_lt_3m[g] = self.two_g_lt_3m.get(g, 0) + 1

    def merge(self, other: "ConcentrationCollector") -> "ConcentrationCollector":
        for name in ("total", "a_band", "m_band", "two_g_lt_3m"):
            mine = getattr(self, name)
            for g, c in getattr(other, name).items():
                mine[g] = mine.get(g, 0) + c
        return self


def concentration_stats(table: CensusTable) -> dict[int, dict[str, float]]:
    """Per-genus fractions from a run that carried a concentration collector.

    Report-only: the underlying limits are asymptotic, so nothing is
    asserted here beyond normalization.
    """
    coll = table.extras["concentration"]
    out = {}
    for g in sorted(coll.total):
        n = coll.total[g]
        out[g] = {
            "f_over_m": coll.a_band.get(g, 0) / n,
            "m_over_g": coll.m_band.get(g, 0) / n,
            "two_g_lt_3m": coll.two_g_lt_3m.get(g, 0) / n,
        }
    return out


def concentration_sweep(g_max: int, eps: float, *, split_depth: int = 0,
                        workers: int = 1) -> dict[int, dict[str, float]]:
    table = enumerate_tree(
        g_max, split_depth=split_depth, workers=workers,
        collectors={"concentration": partial(ConcentrationCollector, eps)},
    )
    return concentration_stats(table)


def ns_parity_rows(counts: dict[int, int]) -> list[tuple[int, int, int]]:
    """Rows (k, ns(2k - 1), ns(2k)) splitting the Frobenius census by parity.

    The interleaved ns sequence is not monotone, but each parity column
    grows steadily; a missing even endpoint is reported as 0.
    """
    f_max = max(counts) if counts else 0
    return [(k, counts.get(2 * k - 1, 0), counts.get(2 * k, 0))
            for k in range(1, f_max // 2 + f_max % 2 + 1)]


# ---------------------------------------------------------------------------
# Growth ratios and monotonicity

def ratio_report(census: CensusTable, *, m_max: int = 9,
                 column_g_max: int | None = None) -> VerificationReport:
    """Fibonacci-style ratios of the genus census, plus monotonicity checks.

    Asserts N(g) >= N(g-1) + N(g-2) and N(g) >= N(g-1) on the covered
    range, and N(m, g) <= N(m, g+1) column by column for m <= m_max.
    Emits (g, (N(g-1)+N(g-2))/N(g), N(g)/N(g-1)) rows for plotting.
    """
    g_max = census.g_max
    if column_g_max is None:
        column_g_max = g_max - 1
    violations = []
    rows = []
    for g in range(2, g_max + 1):
        n, n1, n2 = census.n(g), census.n(g - 1), census.n(g - 2)
        rows.append((g, (n1 + n2) / n, n / n1))
        if n < n1 + n2:
            violations.append({"g": g, "issue": "N(g) < N(g-1) + N(g-2)"})
        if n < n1:
            violations.append({"g": g, "issue": "N(g) < N(g-1)"})
    for m in range(2, m_max + 1):
        for g in range(1, column_g_max + 1):
            if census.n_mg(m, g) > census.n_mg(m, g + 1):
                violations.append({"m": m, "g": g,
                                   "issue": "N(m, g) > N(m, g+1)"})
    return VerificationReport(
        "bras-amoros", {"g_max": g_max, "m_max": m_max}, violations,
        {"rows": rows},
    )


# ---------------------------------------------------------------------------
# Oracle agreement sweeps

def kunz_oracle_sweep(g_max: int = 15, m_max: int = 9, *,
                      census: CensusTable | None = None,
                      formula_g_max: int = 30) -> VerificationReport:
    """Tree counts against polytope counts, plus the exact m = 3 formula."""
    if census is None or census.g_max < g_max:
        census = enumerate_tree(g_max)
    violations = []
    rows = []
    for m in range(2, m_max + 1):
        for g in range(1, g_max + 1):
            poly = count_by_polytope(m, g)
            tree_count = census.n_mg(m, g)
            rows.append((m, g, poly, tree_count, int(poly == tree_count)))
            if poly != tree_count:
                violations.append({"m": m, "g": g, "polytope": poly,
                                   "tree": tree_count})
    # The ceiling formula starts at g = 2: multiplicity 3 forces genus >= 2,
    # so N(3, 1) = 0 while the formula would give 1.
    for g in range(2, formula_g_max + 1):
        expected = (g + 3) // 3      # ceil((g + 1) / 3)
        if count_by_polytope(3, g) != expected:
            violations.append({"m": 3, "g": g, "issue": "ceiling formula",
                               "expected": expected})
    return VerificationReport(
        "kunz-oracle", {"g_max": g_max, "m_max": m_max,
                        "formula_g_max": formula_g_max},
        violations, {"cells": len(rows), "rows": rows},
    )


def recurrence_sweep(g_max: int = 18, bijection_g_max: int = 15, *,
                     census: CensusTable | None = None) -> VerificationReport:
    """The 2g < 3m truncation recurrence, by counts and by explicit bijection.

    Counts: N(m-1, g-1) + N(m-1, g-2) = N(m, g) for every cell with
    2g < 3m, 1 <= g <= g_max, 2 <= m <= g + 1.  Bijection: the truncation
    map itself is checked for g <= bijection_g_max.
    """
    if census is None or census.g_max < g_max:
        census = enumerate_tree(g_max)
    violations = []
    cells = 0
    for g in range(1, g_max + 1):
        for m in range(2, g + 2):
            if 2 * g >= 3 * m:
                continue
            cells += 1
            lhs = census.n_mg(m - 1, g - 1)
            if g >= 2:
                lhs += census.n_mg(m - 1, g - 2)
            if lhs != census.n_mg(m, g):
                violations.append({"m": m, "g": g, "lhs": lhs,
                                   "rhs": census.n_mg(m, g)})
            if m >= 3 and 1 <= g <= bijection_g_max:
                ok, wit = recurrence_bijection_check(m, g)
                if not ok:
                    violations.extend(wit)
    return VerificationReport(
        "recurrence", {"g_max": g_max, "bijection_g_max": bijection_g_max},
        violations, {"cells": cells},
    )


def bounds_sweep(g_max: int = 30, *, census: CensusTable | None = None) -> VerificationReport:
    """2 F(g) <= N(g) <= 1 + 3 * 2^(g-3) for 3 <= g <= g_max, and the
    sandwich fibonacci(g+1) = (F < 2m count) and lower bound <= t(g) <= N(g)."""
    if census is None or census.g_max < g_max:
        census = enumerate_tree(g_max)
    violations = []
    rows = []
    for g in range(1, g_max + 1):
        fib_lower = fibonacci(g + 1)
        zb = zhao_lower_bound(g)
        upper = 1 + 3 * 2 ** (g - 3) if g >= 3 else None
        rows.append((g, fib_lower, zb, census.t(g), census.n(g), upper or ""))
        if census.f_lt_2m[g] != fib_lower:
            violations.append({"g": g, "issue": "F < 2m count != fibonacci(g+1)",
                               "count": census.f_lt_2m[g]})
        if not zb <= census.t(g) <= census.n(g):
            violations.append({"g": g, "issue": "lower bound ordering",
                               "zhao": zb, "t": census.t(g), "n": census.n(g)})
        if g >= 3 and not 2 * fibonacci(g) <= census.n(g) <= upper:
            violations.append({"g": g, "lower": 2 * fibonacci(g),
                               "n": census.n(g), "upper": upper})
    return VerificationReport("bounds", {"g_max": g_max}, violations,
                              {"rows": rows})
