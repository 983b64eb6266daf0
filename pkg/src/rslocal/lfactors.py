"""Closed-form local L-factors for cuspidal and Steinberg/Speh pairs.

For a formal cuspidal datum rho with unramified self-twist group of order
d, the cuspidal pair factor is

    L(s + c, rho, rho_dual) = 1 / (1 - q^(-c d) X^d),

trivial (equal to 1) whenever the second datum is not an unramified twist
of the dual of the first.  For the pair of a generalized Steinberg of
length l and a Steinberg / Speh / full induced module of length k <= l over
the dual datum, the factor is the pole ladder

    prod_{i=0}^{k-1} 1 / (1 - q^(offset*d) q^((k-l-2i)d/2) X^d),

identical for the three right-hand kinds.  The offset exponent combines the
spec knob s0, which shifts every pole exponent by +s0*d, with the twists
carried by the two data, which enter with a minus sign (twisting the pair
by nu^t substitutes X -> q^(-t) X).

Because the poles form a geometric ladder with ratio q^d, the partial
fraction decomposition in Y = X^d has the closed-form simple-pole residues

    lambda_i = prod_{j != i} 1 / (1 - q^((i-j)d)),

which are exact elements of Q(q^d), not merely complex numbers, and always
sum to 1 (evaluate at Y = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .halfint import HalfLike, as_fraction, twice
from .ratfunc import RationalFunction
from .scalars import BaseScalar
from .segments import CuspidalDatum, Kind, RepDescriptor

_RIGHT_KINDS = (Kind.STEINBERG, Kind.SIGMA, Kind.SPEH)


@dataclass(frozen=True)
class LFactorSpec:
    """A Steinberg-times-(St | Sigma | Sp) pair with an offset exponent."""

    left: RepDescriptor
    right: RepDescriptor
    twice_s0: int = 0

    def __post_init__(self):
        if self.left.kind is not Kind.STEINBERG:
            raise ValueError("left descriptor must be a Steinberg kind")
        if self.right.kind not in _RIGHT_KINDS:
            raise ValueError("right descriptor must be St, Sigma or Sp")
        if self.l < self.k or self.k < 1:
            raise ValueError(
                f"need l >= k >= 1, got l = {self.l}, k = {self.k}"
            )
        if self.is_dual_pair and self.left.datum.degree != self.right.datum.degree:
            raise ValueError("dual-equivalent data must share their degree")

    @classmethod
    def make(
        cls,
        left: RepDescriptor,
        right: RepDescriptor,
        s0: HalfLike = 0,
    ) -> "LFactorSpec":
        return cls(left, right, twice(s0))

    @classmethod
    def unramified(
        cls,
        l: int,
        k: int,
        d: int = 1,
        s0: HalfLike = 0,
        right_kind: Kind = Kind.STEINBERG,
        distinct_inertial: bool = False,
    ) -> "LFactorSpec":
        """Pair of formal unramified-type data of torsion d (degree d).

        The right datum is the contragredient of the left one, or an
        inertially distinct datum when requested (making the factor 1).
        """
        datum = CuspidalDatum(degree=d, torsion=d, label="rho")
        if distinct_inertial:
            partner = CuspidalDatum(degree=d, torsion=d, label="tau", dual=True)
        else:
            partner = datum.contragredient()
        left = RepDescriptor.steinberg(l, datum)
        builder = {
            Kind.STEINBERG: RepDescriptor.steinberg,
            Kind.SIGMA: RepDescriptor.sigma,
            Kind.SPEH: RepDescriptor.speh,
        }[right_kind]
        return cls(left, builder(k, partner), twice(s0))

    @property
    def l(self) -> int:
        return self.left.level

    @property
    def k(self) -> int:
        return self.right.level

    @property
    def d(self) -> int:
        return self.left.datum.torsion

    @property
    def s0(self) -> Fraction:
        return as_fraction(self.twice_s0)

    @property
    def is_dual_pair(self) -> bool:
        return self.left.datum.dual_up_to_unramified_twist(self.right.datum)

    @property
    def twice_offset(self) -> int:
        """Doubled pole-offset exponent: s0 minus the data twists."""
        return (
            self.twice_s0
            - self.left.datum.twice_twist
            - self.right.datum.twice_twist
        )

    def pole(self, i: int) -> BaseScalar:
        """The i-th pole scalar, i = 0..k-1, in descending ladder order."""
        u_exp = self.d * (self.twice_offset + self.k - self.l - 2 * i)
        return BaseScalar.u_power(u_exp)


@dataclass(frozen=True)
class PartialFraction:
    """Sum of simple-pole terms lambda_i / (1 - c_i Y) with Y = X^power."""

    power: int
    terms: tuple[tuple[BaseScalar, BaseScalar], ...]

    def __post_init__(self):
        poles = [c for c, _ in self.terms]
        for i in range(len(poles)):
            for j in range(i + 1, len(poles)):
                if poles[i] == poles[j]:
                    raise ValueError("repeated pole in partial fraction")

    def lambda_sum(self) -> BaseScalar:
        acc = BaseScalar.zero()
        for _, lam in self.terms:
            acc = acc + lam
        return acc


def l_cuspidal_pair(
    rho: CuspidalDatum, rho2: CuspidalDatum, shift: HalfLike = 0
) -> RationalFunction:
    """L-factor of a pair of cuspidal data, shifted by nu^shift.

    Returns 1 unless rho2 is an unramified twist of the dual of rho; in the
    dual case the self-twist torsion turns the factor into
    1 / (1 - q^(-c d) X^d) with c = shift + twist(rho) + twist(rho2).
    """
    if not rho.dual_up_to_unramified_twist(rho2):
        return RationalFunction.one()
    d = rho.torsion
    twice_c = twice(shift) + rho.twice_twist + rho2.twice_twist
    pole = BaseScalar.u_power(-d * twice_c)
    return RationalFunction.geometric(pole, d)


def l_steinberg_pair(spec: LFactorSpec) -> RationalFunction:
    """The closed-form pole ladder of a Steinberg-type pair.

    The output only depends on (l, k, d, offset); in particular the three
    right-hand kinds St, Sigma and Sp give identical canonical forms.
    """
    if not spec.is_dual_pair:
        return RationalFunction.one()
    acc = RationalFunction.one()
    for i in range(spec.k):
        acc = acc * RationalFunction.geometric(spec.pole(i), spec.d)
    return acc


def partial_fractions(spec: LFactorSpec) -> PartialFraction:
    """Simple-pole decomposition of l_steinberg_pair(spec) in Y = X^d.

    The residues come from the pole-ratio formula
    lambda_i = prod_{j != i} 1 / (1 - c_j / c_i) = prod_{j != i}
    1 / (1 - q^((i-j)d)); they depend only on k and d.
    """
    if not spec.is_dual_pair:
        raise ValueError(
            "the L-factor of an inertially distinct pair is 1; "
            "there is nothing to decompose"
        )
    one = BaseScalar.one()
    terms = []
    for i in range(spec.k):
        lam = one
        for j in range(spec.k):
            if j == i:
                continue
            lam = lam / (one - BaseScalar.u_power(2 * (i - j) * spec.d))
        terms.append((spec.pole(i), lam))
    return PartialFraction(spec.d, tuple(terms))


def recombine(pf: PartialFraction) -> RationalFunction:
    """Sum the simple-pole terms back into one canonical rational function."""
    acc = RationalFunction.zero()
    for pole, lam in pf.terms:
        acc = acc + RationalFunction.geometric(pole, pf.power).scaled(lam)
    return acc
