"""Acceptance gate: one test per criterion, exact equality, timed.

Every identity is exact (coefficientwise equality in Q(u), tolerance
zero).  Each test prints one pass/fail line; run with `pytest -s` to see
them as they complete.
"""

import itertools
import random
import time
from collections import Counter
from fractions import Fraction

from rslocal import (
    BaseScalar,
    CuspidalDatum,
    FullLattice,
    IntegralSpec,
    Kind,
    LFactorSpec,
    RationalFunction,
    RepDescriptor,
    check_partial_fraction_identity,
    derivative_multiset,
    equal_size_series,
    hecke_series,
    l_steinberg_pair,
    linked,
    partial_fractions,
    precedes,
    recombine,
    rf_expand,
    schur,
    schur_bialternant,
    series_eq,
    verify_identity,
    zelevinsky_dual_discrete,
)
from rslocal.verify import (
    cauchy_case,
    steinberg_distinct_case,
    steinberg_equal_case,
    tate_case,
)
from rslocal.whittaker import SatakeParams, UnramifiedCharacter

from generators import random_scalar, random_segment
from test_integrals import _brute_series, equal_spec, hecke_spec

ONE = BaseScalar.one()


def _report(number: int, name: str, passed: bool, elapsed: float, bound: float):
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {number} [{name}]: {status} ({elapsed:.3f}s, bound {bound}s)")


def _run(number: int, name: str, bound: float, fn):
    start = time.perf_counter()
    passed, detail = fn()
    elapsed = time.perf_counter() - start
    _report(number, name, passed and elapsed < bound, elapsed, bound)
    assert passed, detail
    assert elapsed < bound, f"{name} took {elapsed:.2f}s, budget {bound}s"


def test_criterion_1_tate():
    def run():
        spec, closed = tate_case(30)
        series = equal_size_series(spec)
        ok, idx = series_eq(series, rf_expand(closed, 30))
        return ok, f"first mismatch {idx}"

    _run(1, "tate", 0.1, run)


def test_criterion_2_distinct_pairs():
    pairs = ((2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 2), (5, 4))

    def run():
        for l, k in pairs:
            spec, closed = steinberg_distinct_case(l, k, 24)
            series = hecke_series(spec)
            ok, idx = series_eq(series, rf_expand(closed, 24))
            if not ok:
                return False, f"(l={l}, k={k}) mismatch at {idx}"
        return True, ""

    _run(2, "steinberg-distinct", 10.0, run)


def test_criterion_3_equal_sizes():
    def run():
        for l in (2, 3, 4):
            spec, closed = steinberg_equal_case(l, 24)
            series = equal_size_series(spec)
            ok, idx = series_eq(series, rf_expand(closed, 24))
            if not ok:
                return False, f"l={l} mismatch at {idx}"
        return True, ""

    _run(3, "steinberg-equal", 10.0, run)


def test_criterion_4_cauchy():
    def run():
        for n in (2, 3):
            spec, closed = cauchy_case(n, 16)
            series = equal_size_series(spec)
            ok, idx = series_eq(series, rf_expand(closed, 16))
            if not ok:
                return False, f"n={n} mismatch at {idx}"
        return True, ""

    _run(4, "spherical-cauchy", 30.0, run)


GRID = [
    (l, k, d, s0)
    for k in (1, 2, 3)
    for l in range(k, 7)
    for d in (1, 2, 3)
    for s0 in (Fraction(0), Fraction(1, 2))
]


def test_criterion_5_pole_sum_battery():
    def run():
        for l, k, d, s0 in GRID:
            report = check_partial_fraction_identity(l, k, d=d, s0=s0, depth=20)
            if not report.recombines:
                return False, f"recombination failed at {(l, k, d, s0)}"
            if not report.lambda_sum_is_one:
                return False, f"lambda sum != 1 at {(l, k, d, s0)}"
            if d == 1:
                if len(report.summand_checks) != k:
                    return False, f"missing summand checks at {(l, k, d, s0)}"
                for i, verdict in enumerate(report.summand_checks):
                    if not verdict.equal:
                        return False, f"summand {i} of {(l, k, d, s0)} mismatched"
        return True, ""

    _run(5, "pole-sum-battery", 20.0, run)


def test_criterion_6_three_way_equality():
    def run():
        for l, k, d, s0 in GRID:
            forms = {
                l_steinberg_pair(
                    LFactorSpec.unramified(l, k, d=d, s0=s0, right_kind=kind)
                )
                for kind in (Kind.STEINBERG, Kind.SIGMA, Kind.SPEH)
            }
            if len(forms) != 1:
                return False, f"kinds disagree at {(l, k, d, s0)}"
        return True, ""

    _run(6, "three-way-equality", 20.0, run)


def _field_laws(cases: int) -> bool:
    rng = random.Random(20240117)
    for _ in range(cases):
        a = random_scalar(rng, 3)
        b = random_scalar(rng, 3)
        c = random_scalar(rng, 3)
        if (a + b) + c != a + (b + c):
            return False
        if a * (b + c) != a * b + a * c:
            return False
        if not a.is_zero and not (a * a.inverse()).is_one:
            return False
    return True


def _segment_invariants(cases: int) -> bool:
    rng = random.Random(8128)
    for _ in range(cases):
        s1, s2 = random_segment(rng), random_segment(rng)
        if linked(s1, s2) != linked(s2, s1):
            return False
        if linked(s1, s1):
            return False
        if (s1.contains(s2) or s2.contains(s1)) and linked(s1, s2):
            return False
        if precedes(s1, s2) and not linked(s1, s2):
            return False
        if precedes(s1, s2) and precedes(s2, s1):
            return False
    rho = CuspidalDatum(1, 1, "rho", dual=True)
    for k in range(1, 13):
        st = RepDescriptor.steinberg(k, rho)
        if zelevinsky_dual_discrete(zelevinsky_dual_discrete(st)) != st:
            return False
        sig = derivative_multiset(RepDescriptor.sigma(k, rho), level=k - 1)
        single = derivative_multiset(st, level=k - 1)
        if sum(sig.values()) != k:
            return False
        if not all(sig[key] >= n for key, n in single.items()):
            return False
    return True


def _schur_dual_algorithms() -> bool:
    for n in range(1, 5):
        params = SatakeParams.sigma(n)
        for size in range(9):
            for lam in itertools.product(range(size + 1), repeat=n):
                if sum(lam) != size:
                    continue
                if any(lam[i] < lam[i + 1] for i in range(n - 1)):
                    continue
                if schur(params, lam) != schur_bialternant(params, lam):
                    return False
    return True


def _brute_force_equivalence() -> bool:
    specs = [
        hecke_spec(3, 2, depth=6),
        hecke_spec(4, 3, depth=6),
        equal_spec(3, depth=6),
    ]
    for spec in specs:
        series = (
            hecke_series(spec) if spec.n > spec.m else equal_size_series(spec)
        )
        if series_eq(series, _brute_series(spec)) != (True, None):
            return False
    return True


def _mutation_controls() -> bool:
    spec = hecke_spec(3, 2, depth=8)
    closed = rf_expand(l_steinberg_pair(LFactorSpec.unramified(3, 2)), 8)
    for perturb in ("delta-inverse", "det-shift", "support-cut"):
        mutated = hecke_series(spec, perturb=perturb)
        equal, _ = series_eq(mutated, closed)
        if equal:
            return False
    return True


def test_criterion_7_property_suites():
    def run():
        if not _field_laws(1000):
            return False, "field laws failed"
        if not _segment_invariants(1000):
            return False, "segment invariants failed"
        if not _schur_dual_algorithms():
            return False, "Schur dual-algorithm disagreement"
        if not _brute_force_equivalence():
            return False, "support enumeration mismatch"
        if not _mutation_controls():
            return False, "a perturbed weight still matched"
        return True, ""

    _run(7, "property-suites", 60.0, run)
