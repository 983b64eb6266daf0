"""Cuspidal segments and descriptors of Steinberg/Speh-type representations.

A cuspidal datum is a formal cuspidal representation: a degree r, the order
d of its group of unramified self-twists (d divides r), an opaque inertial
label, a contragredient flag, and a half-integer twist c recording nu^c rho.
A segment [a, b] over a datum is an arithmetic progression of twists; a
descriptor is either a single generalized Steinberg / Speh / full induced
module over one segment, or a product of discrete series given by a list of
segments.

Twists and duals are kept on the nose: the engine never quotients by the
group of unramified self-twists at the descriptor level, and never decides
self-duality.  Duality enters only through an explicit
"dual up to unramified twist" predicate used by L-factor formation.

Half-integers are stored as doubled integers so comparisons stay exact.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction

from .halfint import HalfLike, as_fraction, twice


@dataclass(frozen=True)
class CuspidalDatum:
    degree: int
    torsion: int
    label: str = "rho"
    dual: bool = False
    twice_twist: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if self.torsion < 1 or self.degree % self.torsion != 0:
            raise ValueError(
                f"torsion {self.torsion} must divide degree {self.degree}"
            )

    @classmethod
    def make(
        cls,
        degree: int = 1,
        torsion: int = 1,
        label: str = "rho",
        dual: bool = False,
        twist: HalfLike = 0,
    ) -> "CuspidalDatum":
        return cls(degree, torsion, label, dual, twice(twist))

    @property
    def twist(self) -> Fraction:
        return as_fraction(self.twice_twist)

    def twisted(self, t: HalfLike) -> "CuspidalDatum":
        return replace(self, twice_twist=self.twice_twist + twice(t))

    def contragredient(self) -> "CuspidalDatum":
        """Formal dual: flips the flag and negates the twist."""
        return replace(self, dual=not self.dual, twice_twist=-self.twice_twist)

    def inertially_same(self, other: "CuspidalDatum") -> bool:
        """Same underlying inertial class, twist ignored."""
        return (
            self.label == other.label
            and self.degree == other.degree
            and self.torsion == other.torsion
            and self.dual == other.dual
        )

    def dual_up_to_unramified_twist(self, other: "CuspidalDatum") -> bool:
        """Whether other is an unramified twist of the dual of self."""
        return (
            self.label == other.label
            and self.degree == other.degree
            and self.torsion == other.torsion
            and self.dual != other.dual
        )


@dataclass(frozen=True)
class Segment:
    """Cuspidal segment [nu^a rho, ..., nu^b rho] with b - a a nonneg integer."""

    datum: CuspidalDatum
    twice_a: int
    twice_b: int

    def __post_init__(self):
        span = self.twice_b - self.twice_a
        if span < 0 or span % 2 != 0:
            raise ValueError(
                f"segment endpoints must differ by a nonnegative integer: "
                f"a={as_fraction(self.twice_a)}, b={as_fraction(self.twice_b)}"
            )

    @classmethod
    def make(cls, datum: CuspidalDatum, a: HalfLike, b: HalfLike) -> "Segment":
        return cls(datum, twice(a), twice(b))

    @classmethod
    def centered(cls, datum: CuspidalDatum, length: int) -> "Segment":
        """The segment [nu^((1-k)/2) rho, nu^((k-1)/2) rho] of length k."""
        if length < 1:
            raise ValueError("segment length must be >= 1")
        return cls(datum, 1 - length, length - 1)

    @property
    def a(self) -> Fraction:
        return as_fraction(self.twice_a)

    @property
    def b(self) -> Fraction:
        return as_fraction(self.twice_b)

    @property
    def length(self) -> int:
        return (self.twice_b - self.twice_a) // 2 + 1

    @property
    def group_size(self) -> int:
        return self.length * self.datum.degree

    @property
    def twice_start(self) -> int:
        """Absolute left endpoint, datum twist included (doubled)."""
        return self.twice_a + self.datum.twice_twist

    @property
    def twice_end(self) -> int:
        return self.twice_b + self.datum.twice_twist

    @property
    def e_value(self) -> Fraction:
        """(a + b)/2 + twist, the exponent ordering standard modules."""
        return Fraction(self.twice_a + self.twice_b, 4) + self.datum.twist

    def contains(self, other: "Segment") -> bool:
        """Set containment of the underlying twist progressions."""
        if not self.datum.inertially_same(other.datum):
            return False
        if (self.twice_start - other.twice_start) % 2 != 0:
            return False
        return (
            self.twice_start <= other.twice_start
            and other.twice_end <= self.twice_end
        )


def linked(s1: Segment, s2: Segment) -> bool:
    """Whether two segments are linked.

    Linked means: same inertial datum, twist difference an integer, neither
    segment contains the other, and the union of the two progressions is
    again a segment (they overlap or are adjacent).
    """
    if not s1.datum.inertially_same(s2.datum):
        return False
    if (s1.twice_start - s2.twice_start) % 2 != 0:
        return False
    if s1.contains(s2) or s2.contains(s1):
        return False
    # Union is a segment iff the gap between them is at most one step.
    lo = max(s1.twice_start, s2.twice_start)
    hi = min(s1.twice_end, s2.twice_end)
    return lo <= hi + 2


def precedes(s1: Segment, s2: Segment) -> bool:
    """Linked and starting strictly earlier."""
    return linked(s1, s2) and s1.twice_start < s2.twice_start


class Kind(enum.Enum):
    STEINBERG = "St"
    SIGMA = "Sigma"
    SPEH = "Sp"
    PRODUCT = "product"


@dataclass(frozen=True)
class RepDescriptor:
    """A generalized Steinberg / Speh / standard module, or a product.

    For the three single-segment kinds the segment list is the single
    centered segment of the given length, tagged with the kind.  A PRODUCT
    holds an ordered list of discrete-series segments.
    """

    kind: Kind
    segments: tuple[Segment, ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("descriptor needs at least one segment")
        if self.kind is not Kind.PRODUCT and len(self.segments) != 1:
            raise ValueError(f"{self.kind.value} descriptor takes one segment")

    @classmethod
    def steinberg(cls, k: int, datum: CuspidalDatum) -> "RepDescriptor":
        return cls(Kind.STEINBERG, (Segment.centered(datum, k),))

    @classmethod
    def sigma(cls, k: int, datum: CuspidalDatum) -> "RepDescriptor":
        return cls(Kind.SIGMA, (Segment.centered(datum, k),))

    @classmethod
    def speh(cls, k: int, datum: CuspidalDatum) -> "RepDescriptor":
        return cls(Kind.SPEH, (Segment.centered(datum, k),))

    @classmethod
    def product(cls, segments: list[Segment] | tuple[Segment, ...]) -> "RepDescriptor":
        return cls(Kind.PRODUCT, tuple(segments))

    @classmethod
    def sigma_defining_product(cls, k: int, datum: CuspidalDatum) -> "RepDescriptor":
        """The product nu^((k-1)/2) rho x ... x nu^((1-k)/2) rho."""
        segs = [
            Segment(datum.twisted(Fraction(k - 1 - 2 * i, 2)), 0, 0)
            for i in range(k)
        ]
        return cls(Kind.PRODUCT, tuple(segs))

    @property
    def segment(self) -> Segment:
        if self.kind is Kind.PRODUCT:
            raise ValueError("a product has no single segment")
        return self.segments[0]

    @property
    def level(self) -> int:
        """Length k of the underlying segment (single-segment kinds only)."""
        return self.segment.length

    @property
    def datum(self) -> CuspidalDatum:
        return self.segment.datum

    @property
    def group_size(self) -> int:
        return sum(s.group_size for s in self.segments)


def product_factors(pi: RepDescriptor) -> tuple[Segment, ...]:
    """The discrete-series factors of pi, when pi is such a product.

    A Steinberg descriptor is a single discrete series; a product is its own
    list; a full induced module descriptor contributes its defining product
    of cuspidal (length one) segments.  Speh kinds are rejected, they are
    not products of discrete series for k >= 2.
    """
    if pi.kind is Kind.PRODUCT:
        return pi.segments
    if pi.kind is Kind.STEINBERG:
        return pi.segments
    if pi.kind is Kind.SIGMA:
        seg = pi.segment
        k = seg.length
        return RepDescriptor.sigma_defining_product(k, seg.datum).segments
    raise ValueError(f"{pi.kind.value} descriptor is not a product of discrete series")


def is_standard(pi: RepDescriptor) -> bool:
    """Whether the e-values of the factors are nonincreasing."""
    factors = product_factors(pi)
    es = [s.e_value for s in factors]
    return all(es[i] >= es[i + 1] for i in range(len(es) - 1))


def is_generic_product(pi: RepDescriptor) -> bool:
    """Whether the factors are pairwise unlinked."""
    factors = product_factors(pi)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if linked(factors[i], factors[j]):
                return False
    return True


def zelevinsky_dual_discrete(pi: RepDescriptor) -> RepDescriptor:
    """Exchange the generalized Steinberg and its Speh dual; involutive."""
    if pi.kind is Kind.STEINBERG:
        return RepDescriptor(Kind.SPEH, pi.segments)
    if pi.kind is Kind.SPEH:
        return RepDescriptor(Kind.STEINBERG, pi.segments)
    raise ValueError(
        "duality is only provided for Steinberg and Speh descriptors"
    )


def derivative_multiset(pi: RepDescriptor, level: int) -> Counter:
    """Cuspidal content of the highest-interesting derivative.

    At derivative level (k-1)r the full induced module of length k breaks
    into the k twists nu^((1-k)/2 + i) rho, i = 0..k-1, while the Steinberg
    of length k contributes only the top twist nu^((k-1)/2) rho.  Other
    kinds and levels are rejected rather than guessed.
    """
    if pi.kind not in (Kind.SIGMA, Kind.STEINBERG):
        raise ValueError(
            f"derivative multiset is defined for Sigma and St kinds, "
            f"got {pi.kind.value}"
        )
    seg = pi.segment
    k, r = seg.length, seg.datum.degree
    expected = (k - 1) * r
    if level != expected:
        raise ValueError(
            f"unsupported derivative level {level}; only {(k - 1)}*{r} = "
            f"{expected} is available for this descriptor"
        )
    if pi.kind is Kind.SIGMA:
        twists = [seg.a + i for i in range(k)]
    else:
        twists = [seg.b]
    return Counter(seg.datum.twisted(t) for t in twists)
