"""Rational functions and truncated power series in X = q^(-s) over Q(u).

An L-factor is a rational function of X with coefficients in Q(u); a
truncated torus sum is a power series in X known up to some order.  Both
live here, with canonical forms chosen so that equality is structural:

* XPoly trims trailing zero coefficients; the degree of the zero
  polynomial is the sentinel None.
* RationalFunction keeps gcd(num, den) = 1 and scales den so that its
  constant term is 1 when nonzero (every L-factor denominator is a product
  of factors 1 - c*X^d, so this is the natural gauge), falling back to a
  monic den otherwise.
* TruncatedSeries carries its order explicitly; arithmetic on two series
  uses the minimum of the two orders and never silently widens it.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import BaseScalar, RationalLike

ScalarLike = BaseScalar | RationalLike

_ZERO = BaseScalar.zero()
_ONE = BaseScalar.one()


def _coerce(value: ScalarLike) -> BaseScalar:
    if isinstance(value, BaseScalar):
        return value
    return BaseScalar.from_rational(value)


class XPoly:
    """Dense polynomial in X with BaseScalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("XPoly is immutable")

    @classmethod
    def zero(cls) -> "XPoly":
        return cls()

    @classmethod
    def one(cls) -> "XPoly":
        return cls((_ONE,))

    @classmethod
    def x_power(cls, k: int) -> "XPoly":
        return cls([_ZERO] * k + [_ONE])

    @classmethod
    def monomial(cls, c: ScalarLike, k: int) -> "XPoly":
        return cls([_ZERO] * k + [_coerce(c)])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree in X, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> BaseScalar:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coeff(self, k: int) -> BaseScalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    @property
    def constant_term(self) -> BaseScalar:
        return self.coeff(0)

    def __add__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "XPoly":
        return XPoly([-c for c in self.coeffs])

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other: "XPoly") -> "XPoly":
        if self.is_zero or other.is_zero:
            return XPoly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    def scaled(self, c: ScalarLike) -> "XPoly":
        c = _coerce(c)
        return XPoly([a * c for a in self.coeffs])

    def __pow__(self, n: int) -> "XPoly":
        if n < 0:
            raise ValueError("negative power of an XPoly")
        acc = XPoly.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def divmod(self, other: "XPoly") -> tuple["XPoly", "XPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("XPoly division by zero")
        q: dict[int, BaseScalar] = {}
        r = self
        dg = other.degree
        lg_inv = other.leading.inverse()
        while not r.is_zero and r.degree >= dg:
            e = r.degree - dg
            c = r.leading * lg_inv
            q[e] = c
            r = r - other.scaled(c)._shift(e)
        out = [_ZERO] * (max(q) + 1 if q else 0)
        for e, c in q.items():
            out[e] = c
        return XPoly(out), r

    def _shift(self, k: int) -> "XPoly":
        if self.is_zero:
            return self
        return XPoly([_ZERO] * k + list(self.coeffs))

    def exact_div(self, other: "XPoly") -> "XPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact XPoly division")
        return q

    def monic(self) -> "XPoly":
        if self.is_zero:
            return self
        return self.scaled(self.leading.inverse())

    @staticmethod
    def gcd(a: "XPoly", b: "XPoly") -> "XPoly":
        """Monic gcd over the field Q(u)."""
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        from .render import xpoly_text

        return xpoly_text(self)


class RationalFunction:
    """Ratio of XPolys in canonical form; houses every L-factor."""

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly | None = None):
        if den is None:
            den = XPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in Q(u)(X)")
        if num.is_zero:
            num, den = XPoly.zero(), XPoly.one()
        else:
            g = XPoly.gcd(num, den)
            if g.degree and g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.constant_term
            if c.is_zero:
                c = den.leading
            inv = c.inverse()
            num, den = num.scaled(inv), den.scaled(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(XPoly.zero())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(XPoly.one())

    @classmethod
    def from_scalar(cls, c: ScalarLike) -> "RationalFunction":
        return cls(XPoly([c]))

    @classmethod
    def geometric(cls, pole: ScalarLike, power: int = 1) -> "RationalFunction":
        """1 / (1 - pole * X^power)."""
        den = XPoly([_ONE] + [_ZERO] * (power - 1) + [-_coerce(pole)])
        return cls(XPoly.one(), den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == XPoly.one() and self.den == XPoly.one()

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inverse()

    def scaled(self, c: ScalarLike) -> "RationalFunction":
        return RationalFunction(self.num.scaled(c), self.den)

    def equivalent(self, other: "RationalFunction") -> bool:
        """Cross-multiplication equality; canonical __eq__ must agree."""
        return self.num * other.den == other.num * self.den

    def expand(self, order: int) -> "TruncatedSeries":
        """Power series expansion at X = 0 to the given order.

        The coefficients satisfy the linear recurrence defined by den; den
        must not vanish at X = 0.
        """
        if order < 0:
            raise ValueError("negative expansion order")
        d0 = self.den.constant_term
        if d0.is_zero:
            raise ValueError("denominator vanishes at X = 0; not expandable")
        inv = d0.inverse()
        dd = self.den.degree
        out: list[BaseScalar] = []
        for n in range(order + 1):
            acc = self.num.coeff(n)
            for j in range(1, min(n, dd) + 1):
                acc = acc - self.den.coeff(j) * out[n - j]
            out.append(acc * inv)
        return TruncatedSeries(order, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        from .render import rf_text

        return rf_text(self)


class TruncatedSeries:
    """Power series in X known through X^order, coefficients in Q(u)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[ScalarLike]):
        if order < 0:
            raise ValueError("negative series order")
        cs = [_coerce(c) for c in coeffs]
        if len(cs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, [_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [_ONE] + [_ZERO] * order)

    def coeff(self, k: int) -> BaseScalar:
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        d = min(self.order, other.order)
        return TruncatedSeries(d, [self.coeffs[i] + other.coeffs[i] for i in range(d + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        d = min(self.order, other.order)
        out = [_ZERO] * (d + 1)
        for i in range(d + 1):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            for j in range(d + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(d, out)

    def scaled(self, c: ScalarLike) -> "TruncatedSeries":
        c = _coerce(c)
        return TruncatedSeries(self.order, [a * c for a in self.coeffs])

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot widen a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)!r})"

    def __str__(self) -> str:
        from .render import series_text

        return series_text(self)


def rf_normalize(num: XPoly, den: XPoly) -> RationalFunction:
    """Canonical rational function num/den; rejects a zero denominator."""
    return RationalFunction(num, den)


def rf_expand(rf: RationalFunction, order: int) -> TruncatedSeries:
    return rf.expand(order)


def series_eq(a: TruncatedSeries, b: TruncatedSeries) -> tuple[bool, int | None]:
    """Compare up to the smaller order; on failure report the first bad index."""
    d = min(a.order, b.order)
    for i in range(d + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return False, i
    return True, None
