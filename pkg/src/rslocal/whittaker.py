"""Symbolic Whittaker-function values on diagonal cocharacter elements.

Three kinds of torus functions appear in the unramified integrals:

* the normalized spherical vector of an unramified standard module, whose
  value at diag(pi^l1, ..., pi^ln) is delta_B^(1/2) times the Schur
  polynomial s_lambda evaluated at the Satake parameters, and zero off
  dominant cocharacters;
* the essential (new-)vector of the Steinberg representation built from the
  trivial character, whose torus values on diag(a, 1) are supported on
  (v, 0, ..., 0) with v >= 0, where they equal q^(-v(l-1));
* an unramified character nu^e, with value q^(-e * sum(lambda)).

Schur polynomials are computed through the Jacobi-Trudi determinant over
complete homogeneous symmetric polynomials; the bialternant (ratio of
alternants) is provided as an independent cross-check algorithm.  Values
are memoized behind read-only caches keyed by immutable inputs, which is
safe for concurrent readers and never changes observable results.

The additive character is taken with conductor zero, so torus values for
psi and its inverse coincide and one value table serves both sides of an
integral pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .halfint import HalfLike, as_fraction, twice
from .scalars import BaseScalar

_ZERO = BaseScalar.zero()
_ONE = BaseScalar.one()


@dataclass(frozen=True)
class Cocharacter:
    """Integer tuple indexing diag(pi^l1, ..., pi^ln); dominance is queried."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ValueError("cocharacter needs at least one entry")

    @classmethod
    def of(cls, entries: Sequence[int]) -> "Cocharacter":
        return cls(tuple(int(e) for e in entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def is_dominant(self) -> bool:
        return all(
            self.entries[i] >= self.entries[i + 1] for i in range(self.n - 1)
        )

    def padded(self, n: int) -> "Cocharacter":
        if n < self.n:
            raise ValueError("cannot pad to a smaller length")
        return Cocharacter(self.entries + (0,) * (n - self.n))


def _entries(lam: "Cocharacter | Sequence[int]") -> tuple[int, ...]:
    if isinstance(lam, Cocharacter):
        return lam.entries
    return tuple(int(e) for e in lam)


@dataclass(frozen=True)
class SatakeParams:
    """Values at a uniformizer of the unramified inducing characters."""

    alphas: tuple[BaseScalar, ...]

    def __post_init__(self):
        if not self.alphas:
            raise ValueError("need at least one Satake parameter")
        if any(a.is_zero for a in self.alphas):
            raise ValueError("Satake parameters must be nonzero")

    @classmethod
    def sigma(cls, k: int, twist: HalfLike = 0) -> "SatakeParams":
        """Parameters q^((k+1-2i)/2 - t), i = 1..k, of the twisted module.

        These are the parameter values of the full induced module of length
        k over the trivial character, twisted by nu^t (a twist by nu^t
        multiplies every parameter by q^(-t)).
        """
        t2 = twice(twist)
        return cls(
            tuple(BaseScalar.u_power(k + 1 - 2 * i - t2) for i in range(1, k + 1))
        )

    @property
    def n(self) -> int:
        return len(self.alphas)

    def product(self) -> BaseScalar:
        acc = _ONE
        for a in self.alphas:
            acc = acc * a
        return acc


@lru_cache(maxsize=None)
def _h_complete(alphas: tuple[BaseScalar, ...], j: int, m: int) -> BaseScalar:
    # Complete homogeneous polynomial h_m in the first j parameters.
    if m == 0:
        return _ONE
    if m < 0 or j == 0:
        return _ZERO
    return _h_complete(alphas, j - 1, m) + alphas[j - 1] * _h_complete(
        alphas, j, m - 1
    )


def complete_homogeneous(params: SatakeParams, m: int) -> BaseScalar:
    """h_m(alpha_1, ..., alpha_n)."""
    return _h_complete(params.alphas, params.n, m)


def _det(rows: list[list[BaseScalar]]) -> BaseScalar:
    """Exact determinant over Q(u).

    Division-free cofactor expansion: the matrices here are small (the
    number of segment rows), and avoiding divisions keeps Laurent-type
    entries in their cheap monomial-denominator form throughout.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]

    def minor(cols: tuple[int, ...], row: int) -> BaseScalar:
        if len(cols) == 1:
            return rows[row][cols[0]]
        acc = _ZERO
        sign = 1
        for idx, col in enumerate(cols):
            entry = rows[row][col]
            if not entry.is_zero:
                rest = cols[:idx] + cols[idx + 1 :]
                sub = minor(rest, row + 1)
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        return acc

    return minor(tuple(range(n)), 0)


def _require_dominant(entries: tuple[int, ...]) -> None:
    if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
        raise ValueError(f"cocharacter {entries} is not dominant")


@lru_cache(maxsize=None)
def _schur_jt(alphas: tuple[BaseScalar, ...], entries: tuple[int, ...]) -> BaseScalar:
    if entries[-1] < 0:
        # s_lambda = (prod alphas)^(l_n) * s_(lambda - l_n * (1,..,1))
        shift = entries[-1]
        prod = _ONE
        for a in alphas:
            prod = prod * a
        shifted = tuple(e - shift for e in entries)
        return prod**shift * _schur_jt(alphas, shifted)
    rows = len(entries)
    while rows > 1 and entries[rows - 1] == 0:
        rows -= 1
    n = len(alphas)
    mat = [
        [_h_complete(alphas, n, entries[i] - (i + 1) + (j + 1)) for j in range(rows)]
        for i in range(rows)
    ]
    return _det(mat)


def schur(params: SatakeParams, lam: "Cocharacter | Sequence[int]") -> BaseScalar:
    """Schur polynomial s_lambda(alpha), for dominant lambda of length n.

    Weakly negative dominant lambda is handled by factoring out a power of
    the determinant character, prod(alpha)^(lambda_n).
    """
    entries = _entries(lam)
    if len(entries) != params.n:
        raise ValueError(
            f"cocharacter length {len(entries)} != number of parameters {params.n}"
        )
    _require_dominant(entries)
    return _schur_jt(params.alphas, entries)


def schur_bialternant(
    params: SatakeParams, lam: "Cocharacter | Sequence[int]"
) -> BaseScalar:
    """Independent Schur evaluation as a ratio of alternants.

    det(alpha_i^(lambda_j + n - j)) / det(alpha_i^(n - j)); requires the
    parameters to be pairwise distinct.
    """
    entries = _entries(lam)
    n = params.n
    if len(entries) != n:
        raise ValueError("cocharacter length mismatch")
    _require_dominant(entries)
    alphas = params.alphas
    for i in range(n):
        for j in range(i + 1, n):
            if alphas[i] == alphas[j]:
                raise ValueError("bialternant needs pairwise distinct parameters")
    if entries[-1] < 0:
        shift = entries[-1]
        prod = params.product()
        shifted = tuple(e - shift for e in entries)
        return prod**shift * schur_bialternant(params, shifted)
    numer = _det(
        [[alphas[i] ** (entries[j] + n - (j + 1)) for j in range(n)] for i in range(n)]
    )
    denom = _det([[alphas[i] ** (n - (j + 1)) for j in range(n)] for i in range(n)])
    return numer / denom


def delta_power_u_exponent(lam: "Cocharacter | Sequence[int]") -> int:
    """u-exponent of delta_B^(1/2) at pi^lambda for the upper Borel.

    delta_B(diag(a_1..a_n)) = prod_{i<j} |a_i/a_j| gives
    delta_B(pi^lambda) = q^(-sum (n+1-2i) lambda_i); the square root is the
    u-power with the same exponent.
    """
    entries = _entries(lam)
    n = len(entries)
    return -sum((n + 1 - 2 * (i + 1)) * entries[i] for i in range(n))


def spherical_value(
    params: SatakeParams, lam: "Cocharacter | Sequence[int]"
) -> BaseScalar:
    """Normalized spherical Whittaker value at pi^lambda.

    delta_B^(1/2)(pi^lambda) * s_lambda(alpha) on dominant lambda, zero
    otherwise; equals 1 at lambda = 0.
    """
    entries = _entries(lam)
    if len(entries) != params.n:
        raise ValueError("cocharacter length mismatch")
    if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
        return _ZERO
    return BaseScalar.u_power(delta_power_u_exponent(entries)) * _schur_jt(
        params.alphas, entries
    )


def essential_value(l: int, lam: "Cocharacter | Sequence[int]") -> BaseScalar:
    """Essential-vector torus value of the Steinberg of size l >= 2.

    Evaluated at diag(pi^lambda, 1) with lambda of length l - 1: the value
    is q^(-v(l-1)) when lambda = (v, 0, ..., 0) with v >= 0, zero otherwise.
    """
    if l < 2:
        raise ValueError("essential values need size l >= 2")
    entries = _entries(lam)
    if len(entries) != l - 1:
        raise ValueError(
            f"expected a cocharacter of length {l - 1}, got {len(entries)}"
        )
    v = entries[0]
    if v < 0 or any(e != 0 for e in entries[1:]):
        return _ZERO
    return BaseScalar.u_power(-2 * v * (l - 1))


class TorusFunction:
    """A symbolic Whittaker function seen only through torus values."""

    size: int

    def value_embedded(self, lam: Sequence[int]) -> BaseScalar:
        """Value at diag(pi^lambda, I_(size - len(lambda)))."""
        raise NotImplementedError


@dataclass(frozen=True)
class Spherical(TorusFunction):
    params: SatakeParams

    @property
    def size(self) -> int:
        return self.params.n

    def value_embedded(self, lam: Sequence[int]) -> BaseScalar:
        entries = _entries(lam)
        if len(entries) > self.size:
            raise ValueError("cocharacter longer than the group size")
        padded = entries + (0,) * (self.size - len(entries))
        return spherical_value(self.params, padded)


@dataclass(frozen=True)
class EssentialSteinberg(TorusFunction):
    """Essential vector of the Steinberg of the trivial character, size l.

    Torus values are only defined on points diag(pi^lambda, 1), i.e. for
    cocharacters of length at most l - 1; this is the only case with an
    explicit formula, and the only one the integrals need.
    """

    l: int

    def __post_init__(self):
        if self.l < 2:
            raise ValueError("essential vector needs size l >= 2")

    @property
    def size(self) -> int:
        return self.l

    def value_embedded(self, lam: Sequence[int]) -> BaseScalar:
        entries = _entries(lam)
        if len(entries) > self.l - 1:
            raise ValueError(
                "essential vector values are only defined on diag(a, 1) "
                "points, cocharacter length must be <= size - 1"
            )
        padded = entries + (0,) * (self.l - 1 - len(entries))
        return essential_value(self.l, padded)


@dataclass(frozen=True)
class UnramifiedCharacter(TorusFunction):
    """The character nu^e as a torus function on a group of given size."""

    group_size: int
    twice_exponent: int

    @classmethod
    def make(cls, group_size: int, exponent: HalfLike) -> "UnramifiedCharacter":
        return cls(group_size, twice(exponent))

    @property
    def size(self) -> int:
        return self.group_size

    @property
    def exponent(self) -> Fraction:
        return as_fraction(self.twice_exponent)

    def value_embedded(self, lam: Sequence[int]) -> BaseScalar:
        entries = _entries(lam)
        if len(entries) > self.size:
            raise ValueError("cocharacter longer than the group size")
        return BaseScalar.u_power(-self.twice_exponent * sum(entries))
