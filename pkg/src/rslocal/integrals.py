"""Unramified Rankin-Selberg integrals as truncated torus sums.

With the Haar measure normalized to give every maximal compact volume 1,
an integral of a right-K-invariant function over N_m \\ G_m collapses to a
sum over dominant cocharacters weighted by delta_B^(-1) (Iwasawa
decomposition).  Whittaker support keeps the last exponent nonnegative, so
each integral becomes a genuine power series in X = q^(-s) with finitely
many terms per degree, evaluated here exactly to a chosen truncation depth.

Two families are implemented:

* unequal sizes n > m:  the term at lambda is
  W(diag(pi^lam, I)) * W'(pi^lam) * delta_(B_m)^(-1)(pi^lam)
  * q^(|lam| (n-m)/2) * X^|lam|;

* equal sizes n = m, with a Schwartz weight phi:
    - full lattice indicator: term
      W(pi^lam) * W'(pi^lam) * delta_(B_n)^(-1)(pi^lam) * X^|lam|
      over dominant lam with lam_n >= 0 (the indicator cuts the last
      coordinate to the integers);
    - small congruence ball around (0, .., 0, 1): the integral reduces to
      a sum over the subgroup fixing the last basis vector, with weight
      nu^(s-1); the term at mu of length n - 1 is
      W(diag(pi^mu, 1)) * W'(diag(pi^mu, 1)) * delta_(B_(n-1))^(-1)(pi^mu)
      * q^|mu| * X^|mu|.  The ball radius and its normalizing scale cancel
      in the reduction, so the reduced series is scale-free.

Every evaluator is a pure function of its spec; series terms at distinct
total degrees are independent, so results do not depend on evaluation
order.  The optional `perturb` knob deliberately damages one measure-weight
component at a time; it exists solely for negative-control tests that pin
the conventions, and is never used by the verifying code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from fractions import Fraction

from .halfint import HalfLike
from .lfactors import LFactorSpec, l_steinberg_pair, partial_fractions, recombine
from .ratfunc import RationalFunction, TruncatedSeries, series_eq
from .scalars import BaseScalar
from .whittaker import TorusFunction, UnramifiedCharacter

_ZERO = BaseScalar.zero()
_ONE = BaseScalar.one()

PERTURBATIONS = ("delta-inverse", "det-shift", "support-cut")


@dataclass(frozen=True)
class FullLattice:
    """Indicator of the full lattice of integral vectors."""


@dataclass(frozen=True)
class CongruenceShape:
    """Scaled indicator of a small congruence ball around (0, ..., 0, 1).

    The radius exponent f >= 1 and the symbolic scale (the reciprocal
    volume of the unit-ball factor) are carried for fidelity, but the
    reduced integral below is independent of both.
    """

    radius: int = 1
    scale: BaseScalar = _ONE

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("congruence radius must be >= 1")
        if self.scale.is_zero:
            raise ValueError("scale must be nonzero")


SchwartzShape = FullLattice | CongruenceShape


@dataclass(frozen=True)
class IntegralSpec:
    """A fully specified unramified Rankin-Selberg integral instance."""

    n: int
    m: int
    w: TorusFunction
    w_prime: TorusFunction
    phi: SchwartzShape | None = None
    depth: int = 20

    def __post_init__(self):
        if self.n < self.m or self.m < 1:
            raise ValueError(f"need n >= m >= 1, got n = {self.n}, m = {self.m}")
        if self.depth < 0:
            raise ValueError("truncation depth must be >= 0")
        if self.n == self.m and self.phi is None:
            raise ValueError("equal sizes require a Schwartz shape")
        if self.n > self.m and self.phi is not None:
            raise ValueError("unequal sizes take no Schwartz shape")
        if self.w.size != self.n:
            raise ValueError(
                f"W has group size {self.w.size}, expected {self.n}"
            )
        if self.w_prime.size != self.m:
            raise ValueError(
                f"W' has group size {self.w_prime.size}, expected {self.m}"
            )


def dominant_cocharacters(length: int, total: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing nonnegative tuples of the given length summing to total.

    Enumeration is deterministic: descending lexicographic within each
    total, which makes every series and JSON dump reproducible.
    """

    def parts(remaining: int, max_part: int, slots: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        if remaining > max_part * slots:
            return
        top = min(remaining, max_part)
        for first in range(top, -1, -1):
            for rest in parts(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from parts(total, total, length)


def _delta_inverse_u_exponent(lam: tuple[int, ...]) -> int:
    # delta_B^(-1)(pi^lam) = q^(+sum (m+1-2i) lam_i) on the upper Borel;
    # as a u-exponent that is twice the q-exponent.
    m = len(lam)
    return 2 * sum((m + 1 - 2 * (i + 1)) * lam[i] for i in range(m))


def _check_perturb(perturb: str | None) -> None:
    if perturb is not None and perturb not in PERTURBATIONS:
        raise ValueError(f"unknown perturbation {perturb!r}")


def hecke_series(spec: IntegralSpec, perturb: str | None = None) -> TruncatedSeries:
    """Torus-sum value of the unequal-size integral, to spec.depth."""
    if spec.n <= spec.m:
        raise ValueError("hecke_series needs n > m")
    _check_perturb(perturb)
    coeffs = [_ZERO] * (spec.depth + 1)
    shift = spec.n - spec.m
    for total in range(spec.depth + 1):
        acc = _ZERO
        for lam in dominant_cocharacters(spec.m, total):
            if perturb == "support-cut" and lam[-1] < 1:
                continue
            w = spec.w.value_embedded(lam)
            if w.is_zero:
                continue
            w2 = spec.w_prime.value_embedded(lam)
            if w2.is_zero:
                continue
            du = _delta_inverse_u_exponent(lam)
            if perturb == "delta-inverse":
                du = -du
            su = shift * total
            if perturb == "det-shift":
                su = -su
            acc = acc + w * w2 * BaseScalar.u_power(du + su)
        coeffs[total] = acc
    return TruncatedSeries(spec.depth, coeffs)


def equal_size_series(
    spec: IntegralSpec, perturb: str | None = None
) -> TruncatedSeries:
    """Torus-sum value of the equal-size integral, to spec.depth.

    Dispatches on the Schwartz shape: the full-lattice indicator sums over
    the whole dominant cone, the congruence ball runs the reduced
    one-size-down sum described in the module docstring.
    """
    if spec.n != spec.m:
        raise ValueError("equal_size_series needs n = m")
    _check_perturb(perturb)
    coeffs = [_ZERO] * (spec.depth + 1)
    if isinstance(spec.phi, FullLattice):
        for total in range(spec.depth + 1):
            acc = _ZERO
            for lam in dominant_cocharacters(spec.n, total):
                if perturb == "support-cut" and lam[-1] < 1:
                    continue
                w = spec.w.value_embedded(lam)
                if w.is_zero:
                    continue
                w2 = spec.w_prime.value_embedded(lam)
                if w2.is_zero:
                    continue
                du = _delta_inverse_u_exponent(lam)
                if perturb == "delta-inverse":
                    du = -du
                acc = acc + w * w2 * BaseScalar.u_power(du)
            coeffs[total] = acc
        return TruncatedSeries(spec.depth, coeffs)
    if spec.n < 2:
        raise ValueError("the congruence-ball reduction needs n >= 2")
    for total in range(spec.depth + 1):
        acc = _ZERO
        for mu in dominant_cocharacters(spec.n - 1, total):
            if perturb == "support-cut" and mu[-1] < 1:
                continue
            w = spec.w.value_embedded(mu)
            if w.is_zero:
                continue
            w2 = spec.w_prime.value_embedded(mu)
            if w2.is_zero:
                continue
            du = _delta_inverse_u_exponent(mu)
            if perturb == "delta-inverse":
                du = -du
            # nu(g)^(s-1) contributes q^(+|mu|) X^|mu| at pi^mu.
            su = 2 * total
            if perturb == "det-shift":
                su = -su
            acc = acc + w * w2 * BaseScalar.u_power(du + su)
        coeffs[total] = acc
    return TruncatedSeries(spec.depth, coeffs)


def torus_series(spec: IntegralSpec, perturb: str | None = None) -> TruncatedSeries:
    """The appropriate torus sum for the spec's size pattern."""
    if spec.n > spec.m:
        return hecke_series(spec, perturb)
    return equal_size_series(spec, perturb)


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing a torus sum against a closed form."""

    equal: bool
    first_mismatch: int | None
    depth: int

    def __bool__(self) -> bool:
        return self.equal


def verify_identity(spec: IntegralSpec, closed: RationalFunction) -> Verdict:
    """Expand the closed form and compare with the torus sum coefficientwise."""
    series = torus_series(spec)
    expansion = closed.expand(spec.depth)
    equal, idx = series_eq(series, expansion)
    return Verdict(equal, idx, spec.depth)


@dataclass(frozen=True)
class PoleSumReport:
    """Outcome of the weighted simple-pole decomposition identity."""

    recombines: bool
    lambda_sum_is_one: bool
    summand_checks: tuple[Verdict, ...]

    @property
    def passed(self) -> bool:
        return (
            self.recombines
            and self.lambda_sum_is_one
            and all(v.equal for v in self.summand_checks)
        )


def _summand_integral_spec(
    l: int, k: int, i: int, s0: Fraction, depth: int
) -> IntegralSpec:
    # Torus profile of the i-th weighted extension vector: on the embedded
    # one-dimensional subtorus it is the unramified character nu^(i - s0)
    # cut to the nonnegative cone, paired against nu^((l-1)/2).
    if k == 1:
        return IntegralSpec(
            n=1,
            m=1,
            w=UnramifiedCharacter.make(1, Fraction(l - 1, 2)),
            w_prime=UnramifiedCharacter.make(1, -s0),
            phi=FullLattice(),
            depth=depth,
        )
    return IntegralSpec(
        n=k,
        m=1,
        w=UnramifiedCharacter.make(k, i - s0),
        w_prime=UnramifiedCharacter.make(1, Fraction(l - 1, 2)),
        depth=depth,
    )


def check_partial_fraction_identity(
    l: int, k: int, d: int = 1, s0: HalfLike = 0, depth: int = 20
) -> PoleSumReport:
    """Verify the weighted simple-pole decomposition of the pole ladder.

    Checks, for the unramified pair of lengths l >= k >= 1 and torsion d
    with offset s0, that the residue-weighted sum of single-pole factors
    recombines to the full ladder, that the residues sum to 1, and, when
    d = 1, that each single-pole summand is also realized as a torus-sum
    integral matching its closed form to the given depth.
    """
    spec = LFactorSpec.unramified(l, k, d=d, s0=s0)
    target = l_steinberg_pair(spec)
    pf = partial_fractions(spec)
    recombines = recombine(pf) == target
    lambda_sum_is_one = pf.lambda_sum().is_one
    checks: list[Verdict] = []
    if d == 1:
        for i in range(k):
            closed = RationalFunction.geometric(spec.pole(i), 1)
            ispec = _summand_integral_spec(l, k, i, spec.s0, depth)
            checks.append(verify_identity(ispec, closed))
    return PoleSumReport(recombines, lambda_sum_is_one, tuple(checks))
