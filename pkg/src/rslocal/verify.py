"""The identity battery: named truncated-sum vs closed-form checks.

Each check pits a torus-sum evaluation of an unramified Rankin-Selberg
integral against an independently computed closed form (a pole ladder, a
single geometric factor, or a Cauchy-type product), comparing exact
coefficients in Q(u).  The battery also carries negative controls: runs
with one measure-weight component deliberately perturbed, which must fail,
pinning the delta, determinant-shift and support conventions.

Everything is deterministic given (suite, max_l, depth, seed); the seed
only feeds the randomized algebra spot-checks.  Results are reported in
name order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .integrals import (
    CongruenceShape,
    FullLattice,
    IntegralSpec,
    check_partial_fraction_identity,
    torus_series,
    verify_identity,
)
from .lfactors import LFactorSpec, l_steinberg_pair
from .ratfunc import RationalFunction, series_eq
from .scalars import BaseScalar, UPoly
from .whittaker import EssentialSteinberg, SatakeParams, Spherical, UnramifiedCharacter

SUITES = (
    "all",
    "tate",
    "steinberg-distinct",
    "steinberg-equal",
    "cauchy",
    "pole-sum",
    "three-way",
    "mutation",
    "props",
)

DEFAULT_DISTINCT_PAIRS = ((2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 2), (5, 4))


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    passed: bool
    first_mismatch: int | None = None
    elapsed: float = 0.0


# -- named integral cases ---------------------------------------------------


def tate_case(depth: int) -> tuple[IntegralSpec, RationalFunction]:
    """Size-1 pairing of trivial characters over the full lattice: 1/(1-X)."""
    spec = IntegralSpec(
        n=1,
        m=1,
        w=UnramifiedCharacter.make(1, 0),
        w_prime=UnramifiedCharacter.make(1, 0),
        phi=FullLattice(),
        depth=depth,
    )
    return spec, RationalFunction.geometric(BaseScalar.one(), 1)


def steinberg_distinct_case(
    l: int, k: int, depth: int
) -> tuple[IntegralSpec, RationalFunction]:
    """Essential vector of size l against the spherical vector of size k < l."""
    spec = IntegralSpec(
        n=l,
        m=k,
        w=EssentialSteinberg(l),
        w_prime=Spherical(SatakeParams.sigma(k)),
        depth=depth,
    )
    return spec, l_steinberg_pair(LFactorSpec.unramified(l, k))


def steinberg_equal_case(l: int, depth: int) -> tuple[IntegralSpec, RationalFunction]:
    """Equal sizes with the congruence-ball weight, reduced one size down."""
    spec = IntegralSpec(
        n=l,
        m=l,
        w=EssentialSteinberg(l),
        w_prime=Spherical(SatakeParams.sigma(l)),
        phi=CongruenceShape(),
        depth=depth,
    )
    return spec, l_steinberg_pair(LFactorSpec.unramified(l, l))


def cauchy_case(n: int, depth: int) -> tuple[IntegralSpec, RationalFunction]:
    """Spherical against spherical over the full lattice.

    The closed form is the Cauchy-type product over all parameter pairs,
    prod_{i,j} 1/(1 - alpha_i beta_j X).
    """
    alphas = SatakeParams.sigma(n)
    betas = SatakeParams.sigma(n)
    spec = IntegralSpec(
        n=n,
        m=n,
        w=Spherical(alphas),
        w_prime=Spherical(betas),
        phi=FullLattice(),
        depth=depth,
    )
    closed = RationalFunction.one()
    for a in alphas.alphas:
        for b in betas.alphas:
            closed = closed * RationalFunction.geometric(a * b, 1)
    return spec, closed


CASES = ("tate", "steinberg-distinct", "steinberg-equal", "spherical-cauchy")


def named_case(
    case: str, l: int = 3, k: int = 2, n: int = 2, depth: int = 24
) -> tuple[IntegralSpec, RationalFunction]:
    if case == "tate":
        return tate_case(depth)
    if case == "steinberg-distinct":
        if l <= k:
            raise ValueError("steinberg-distinct needs l > k")
        return steinberg_distinct_case(l, k, depth)
    if case == "steinberg-equal":
        return steinberg_equal_case(l, depth)
    if case == "spherical-cauchy":
        return cauchy_case(n, depth)
    raise ValueError(f"unknown case {case!r}; choose from {CASES}")


# -- suite runners -----------------------------------------------------------


def _timed(name: str, description: str, run) -> CheckResult:
    start = time.perf_counter()
    passed, mism = run()
    return CheckResult(name, description, passed, mism, time.perf_counter() - start)


def _identity_result(name, description, spec, closed) -> CheckResult:
    def run():
        verdict = verify_identity(spec, closed)
        return verdict.equal, verdict.first_mismatch

    return _timed(name, description, run)


def _tate_checks(depth: int) -> list[CheckResult]:
    spec, closed = tate_case(depth)
    return [
        _identity_result(
            "tate", f"size-1 full-lattice sum equals 1/(1-X) to depth {depth}",
            spec, closed,
        )
    ]


def _distinct_checks(max_l: int, depth: int) -> list[CheckResult]:
    out = []
    for l in range(2, max_l + 1):
        for k in range(1, l):
            spec, closed = steinberg_distinct_case(l, k, depth)
            out.append(
                _identity_result(
                    f"steinberg-distinct l={l} k={k}",
                    "essential x spherical sum equals the closed pole ladder",
                    spec,
                    closed,
                )
            )
    return out


def _equal_checks(max_l: int, depth: int) -> list[CheckResult]:
    out = []
    for l in range(2, max_l + 1):
        spec, closed = steinberg_equal_case(l, depth)
        out.append(
            _identity_result(
                f"steinberg-equal l={l}",
                "reduced congruence-ball sum equals the closed pole ladder",
                spec,
                closed,
            )
        )
    return out


def _cauchy_checks(depth: int) -> list[CheckResult]:
    out = []
    for n in (2, 3):
        spec, closed = cauchy_case(n, depth)
        out.append(
            _identity_result(
                f"spherical-cauchy n={n}",
                "spherical x spherical sum equals the Cauchy-type product",
                spec,
                closed,
            )
        )
    return out


def _pole_sum_grid(max_l: int):
    for k in (1, 2, 3):
        for l in range(k, min(max_l, 6) + 1):
            for d in (1, 2, 3):
                for s0 in (Fraction(0), Fraction(1, 2)):
                    yield l, k, d, s0


def _pole_sum_checks(max_l: int, depth: int) -> list[CheckResult]:
    out = []
    for l, k, d, s0 in _pole_sum_grid(max_l):
        name = f"pole-sum l={l} k={k} d={d} s0={s0}"

        def run(l=l, k=k, d=d, s0=s0):
            report = check_partial_fraction_identity(l, k, d, s0, depth)
            mism = next(
                (v.first_mismatch for v in report.summand_checks if not v.equal),
                None,
            )
            return report.passed, mism

        out.append(
            _timed(
                name,
                "residue-weighted single-pole sum recombines to the ladder",
                run,
            )
        )
    return out


def _three_way_checks(max_l: int) -> list[CheckResult]:
    from .segments import Kind

    out = []
    for l, k, d, s0 in _pole_sum_grid(max_l):
        name = f"three-way l={l} k={k} d={d} s0={s0}"

        def run(l=l, k=k, d=d, s0=s0):
            values = [
                l_steinberg_pair(
                    LFactorSpec.unramified(l, k, d=d, s0=s0, right_kind=kind)
                )
                for kind in (Kind.STEINBERG, Kind.SIGMA, Kind.SPEH)
            ]
            return values[0] == values[1] == values[2], None

        out.append(
            _timed(name, "St, Sigma and Sp right factors give one canonical form", run)
        )
    return out


def _mutation_checks(depth: int) -> list[CheckResult]:
    """Negative controls: each perturbed run must disagree with the closed form."""
    depth = min(depth, 12)
    out = []
    targets = [
        ("hecke(3,2)", *steinberg_distinct_case(3, 2, depth)),
        ("equal(3)", *steinberg_equal_case(3, depth)),
        ("tate", *tate_case(depth)),
    ]
    cases = [
        ("hecke(3,2)", "delta-inverse"),
        ("hecke(3,2)", "det-shift"),
        ("hecke(3,2)", "support-cut"),
        ("equal(3)", "delta-inverse"),
        ("equal(3)", "det-shift"),
        ("equal(3)", "support-cut"),
        ("tate", "support-cut"),
    ]
    specs = {name: (spec, closed) for name, spec, closed in targets}
    for target, perturb in cases:
        spec, closed = specs[target]
        name = f"mutation {target} {perturb}"

        def run(spec=spec, closed=closed, perturb=perturb):
            series = torus_series(spec, perturb=perturb)
            equal, idx = series_eq(series, closed.expand(spec.depth))
            return (not equal), idx

        out.append(
            _timed(name, "perturbed measure weight must break the identity", run)
        )

    def wrong_closed():
        spec, _ = tate_case(depth)
        bad = RationalFunction.geometric(BaseScalar.q_power(1), 1)
        verdict = verify_identity(spec, bad)
        return (not verdict.equal) and verdict.first_mismatch == 1, verdict.first_mismatch

    out.append(
        _timed(
            "mutation wrong-closed-form",
            "a wrong pole must be reported with its first mismatch index",
            wrong_closed,
        )
    )
    return out


# -- randomized algebra spot-checks -------------------------------------------


def _random_scalar(rng: random.Random, max_degree: int = 3) -> BaseScalar:
    def poly():
        return UPoly(
            {
                e: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                for e in range(rng.randint(0, max_degree) + 1)
            }
        )

    num = poly()
    den = poly()
    while den.is_zero:
        den = poly()
    return BaseScalar(num, den)


def _props_checks(seed: int, cases: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)

    def field_laws():
        for _ in range(cases):
            a, b, c = (_random_scalar(rng) for _ in range(3))
            if (a + b) + c != a + (b + c):
                return False, None
            if a * (b + c) != a * b + a * c:
                return False, None
            if not a.is_zero and not (a * a.inverse()).is_one:
                return False, None
        return True, None

    def canonical_idempotent():
        for _ in range(cases):
            a = _random_scalar(rng)
            if BaseScalar(a.num, a.den) != a:
                return False, None
        return True, None

    def expansion_ring():
        for _ in range(max(8, cases // 25)):
            r1 = RationalFunction.geometric(_nonzero(rng), 1)
            r2 = RationalFunction.geometric(_nonzero(rng), 1)
            lhs = (r1 * r2).expand(6)
            rhs = r1.expand(6) * r2.expand(6)
            if series_eq(lhs, rhs) != (True, None):
                return False, None
            lhs = (r1 + r2).expand(6)
            rhs = r1.expand(6) + r2.expand(6)
            if series_eq(lhs, rhs) != (True, None):
                return False, None
        return True, None

    return [
        _timed("props field-laws", f"{cases} random associativity, distributivity and inverse cases", field_laws),
        _timed("props canonical-idempotence", "renormalizing a canonical scalar is the identity", canonical_idempotent),
        _timed("props expansion-ring", "series expansion respects sums and products", expansion_ring),
    ]


def _nonzero(rng: random.Random) -> BaseScalar:
    while True:
        s = _random_scalar(rng, max_degree=1)
        if not s.is_zero:
            return s


# -- entry point ------------------------------------------------------------


def run_suite(
    suite: str = "all", max_l: int = 5, depth: int = 24, seed: int = 0
) -> list[CheckResult]:
    """Run the selected identity battery and return name-ordered results."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    checks: list[CheckResult] = []
    if suite in ("all", "tate"):
        checks += _tate_checks(max(depth, 30))
    if suite in ("all", "steinberg-distinct"):
        checks += _distinct_checks(max_l, depth)
    if suite in ("all", "steinberg-equal"):
        checks += _equal_checks(max_l, depth)
    if suite in ("all", "cauchy"):
        checks += _cauchy_checks(min(depth, 16))
    if suite in ("all", "pole-sum"):
        checks += _pole_sum_checks(max_l, min(depth, 20))
    if suite in ("all", "three-way"):
        checks += _three_way_checks(max_l)
    if suite in ("all", "mutation"):
        checks += _mutation_checks(depth)
    if suite in ("all", "props"):
        checks += _props_checks(seed)
    return sorted(checks, key=lambda c: c.name)
