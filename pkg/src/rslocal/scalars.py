"""Exact arithmetic over Q(u), where u stands for q^(1/2).

Every coefficient in the engine is an element of Q(u): a ratio of
polynomials in u with rational coefficients, kept in canonical form
(numerator and denominator coprime, denominator monic) so that equality is
decidable by structural comparison.  The residue cardinality q is u^2, so
half-integer powers of q are honest monomials; that is the whole reason the
base variable is u rather than q.

No floating point is used anywhere.  All values are immutable after
construction and all operations are pure functions, so everything here is
safe to use concurrently without synchronization.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

RationalLike = int | Fraction


class UPoly:
    """Polynomial in u over Q, sparse map from exponent to coefficient.

    Exponents are nonnegative; negative powers of u live in the denominator
    of a BaseScalar.  No stored coefficient is zero, so the zero polynomial
    has an empty map.  Instances are immutable by convention.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, RationalLike] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative u-exponent {e} in UPoly")
                f = Fraction(v)
                if f:
                    c[int(e)] = f
        self._c = c
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "UPoly":
        return cls()

    @classmethod
    def one(cls) -> "UPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: RationalLike) -> "UPoly":
        return cls({0: value})

    @classmethod
    def u_power(cls, exponent: int) -> "UPoly":
        if exponent < 0:
            raise ValueError("UPoly exponents are nonnegative")
        return cls({exponent: 1})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        """Degree in u; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    @property
    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient; 0 for zero."""
        return min(self._c) if self._c else 0

    @property
    def leading(self) -> Fraction:
        if not self._c:
            return Fraction(0)
        return self._c[max(self._c)]

    @property
    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def coeff(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        """Terms in ascending exponent order."""
        return sorted(self._c.items())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "UPoly") -> "UPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, Fraction(0)) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = UPoly.__new__(UPoly)
        out._c = c
        out._hash = None
        return out

    def __neg__(self) -> "UPoly":
        out = UPoly.__new__(UPoly)
        out._c = {e: -v for e, v in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other: "UPoly") -> "UPoly":
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, Fraction(0)) + v1 * v2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        out = UPoly.__new__(UPoly)
        out._c = c
        out._hash = None
        return out

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power of a UPoly")
        acc = UPoly.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def scaled(self, c: RationalLike) -> "UPoly":
        f = Fraction(c)
        if not f:
            return UPoly.zero()
        out = UPoly.__new__(UPoly)
        out._c = {e: v * f for e, v in self._c.items()}
        out._hash = None
        return out

    def shifted(self, k: int) -> "UPoly":
        """Multiply by u^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        out = UPoly.__new__(UPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        out._hash = None
        return out

    # -- division and gcd ----------------------------------------------------

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, Fraction] = {}
        r = self
        dg, lg = other.degree, other.leading
        while not r.is_zero and r.degree >= dg:
            e = r.degree - dg
            c = r.leading / lg
            q[e] = c
            r = r - other.shifted(e).scaled(c)
        return UPoly(q), r

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def content(self) -> Fraction:
        """Positive gcd of the rational coefficients; 0 for the zero poly."""
        if not self._c:
            return Fraction(0)
        num = 0
        den = 1
        for v in self._c.values():
            num = math.gcd(num, abs(v.numerator))
            den = den * v.denominator // math.gcd(den, v.denominator)
        return Fraction(num, den)

    def primitive(self) -> "UPoly":
        """Integer-coefficient primitive part with positive leading coeff."""
        if self.is_zero:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return self.scaled(1 / c)

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        return self.scaled(1 / self.leading)

    def pseudo_rem(self, other: "UPoly") -> "UPoly":
        r = self
        dg, lg = other.degree, other.leading
        while not r.is_zero and r.degree >= dg:
            r = r.scaled(lg) - other.shifted(r.degree - dg).scaled(r.leading)
        return r

    @staticmethod
    def gcd(a: "UPoly", b: "UPoly") -> "UPoly":
        """Monic gcd over Q, via a primitive-part Euclidean sequence.

        The remainder sequence runs on integer primitive parts with plain
        int arithmetic; only the final monic scaling reintroduces
        fractions.
        """
        if a.is_zero:
            return b.monic()
        if b.is_zero:
            return a.monic()
        f = _int_primitive_from_fractions(a._c)
        g = _int_primitive_from_fractions(b._c)
        if max(f) < max(g):
            f, g = g, f
        while g:
            r = _int_pseudo_rem(f, g)
            f, g = g, (_int_primitive(r) if r else r)
        lead = f[max(f)]
        return UPoly({e: Fraction(c, lead) for e, c in f.items()})

    # -- comparisons -----------------------------------------------------------

    def _key(self) -> tuple:
        return tuple(sorted(self._c.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero:
            return "UPoly(0)"
        terms = " + ".join(f"{v}*u^{e}" for e, v in self.items())
        return f"UPoly({terms})"


def _int_primitive(ints: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    if g > 1:
        ints = {e: v // g for e, v in ints.items()}
    if ints[max(ints)] < 0:
        ints = {e: -v for e, v in ints.items()}
    return ints


def _int_primitive_from_fractions(coeffs: dict[int, Fraction]) -> dict[int, int]:
    den_lcm = 1
    for v in coeffs.values():
        den_lcm = den_lcm * v.denominator // math.gcd(den_lcm, v.denominator)
    return _int_primitive(
        {e: v.numerator * (den_lcm // v.denominator) for e, v in coeffs.items()}
    )


def _int_pseudo_rem(f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        shift = dr - dg
        new = {e: v * lg for e, v in r.items()}
        for e, v in g.items():
            ee = e + shift
            new[ee] = new.get(ee, 0) - lr * v
        r = {e: v for e, v in new.items() if v}
    return r


def _monomial_reduce(num: UPoly, den: UPoly) -> tuple[UPoly, UPoly]:
    # Fast path: cancel a common power of u when either side is a monomial.
    v = min(num.valuation, den.valuation)
    if v > 0:
        num = UPoly({e - v: c for e, c in num._c.items()})
        den = UPoly({e - v: c for e, c in den._c.items()})
    return num, den


def _needs_gcd(a: UPoly, b: UPoly) -> bool:
    # A nontrivial common divisor needs degree on both sides, and a
    # monomial side can only contribute the u-power handled separately.
    return (
        a.degree > 0 and b.degree > 0 and not a.is_monomial and not b.is_monomial
    )


class BaseScalar:
    """Element of Q(u) in canonical form.

    Canonical means gcd(num, den) = 1 (polynomial gcd over Q) and den monic,
    so two scalars are equal exactly when their fields coincide.  Zero is
    0/1.  Construction normalizes; the resulting object is immutable.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        if den is None:
            den = UPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in Q(u)")
        if num.is_zero:
            num, den = UPoly.zero(), UPoly.one()
        else:
            num, den = _monomial_reduce(num, den)
            # After the valuation cancel, a monomial side can only share a
            # constant with the other side, so the gcd is trivial.
            if (
                num.degree > 0
                and den.degree > 0
                and not num.is_monomial
                and not den.is_monomial
            ):
                g = UPoly.gcd(num, den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.leading
            if lc != 1:
                inv = 1 / lc
                num, den = num.scaled(inv), den.scaled(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("BaseScalar is immutable")

    @classmethod
    def _canonical(cls, num: UPoly, den: UPoly) -> "BaseScalar":
        # Caller guarantees gcd(num, den) = 1 and den monic and nonzero.
        out = cls.__new__(cls)
        object.__setattr__(out, "num", num)
        object.__setattr__(out, "den", den)
        object.__setattr__(out, "_hash", None)
        return out

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "BaseScalar":
        return cls(UPoly.zero())

    @classmethod
    def one(cls) -> "BaseScalar":
        return cls(UPoly.one())

    @classmethod
    def from_rational(cls, value: RationalLike) -> "BaseScalar":
        return cls(UPoly.constant(value))

    @classmethod
    def u_power(cls, exponent: int) -> "BaseScalar":
        """u^exponent, i.e. q^(exponent/2); exponent may be negative."""
        if exponent >= 0:
            return cls(UPoly.u_power(exponent))
        return cls(UPoly.one(), UPoly.u_power(-exponent))

    @classmethod
    def q_power(cls, exponent: RationalLike) -> "BaseScalar":
        """q^exponent for a half-integer exponent."""
        doubled = 2 * Fraction(exponent)
        if doubled.denominator != 1:
            raise ValueError(f"q-exponent must be a half-integer: {exponent}")
        return cls.u_power(doubled.numerator)

    @staticmethod
    def _coerce(value: "BaseScalar | RationalLike") -> "BaseScalar":
        if isinstance(value, BaseScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return BaseScalar.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to BaseScalar")

    # -- queries ----------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == UPoly.one() and self.den == UPoly.one()

    def as_laurent(self) -> list[tuple[int, Fraction]] | None:
        """If den is a monomial, the terms c*u^e with e possibly negative."""
        if not self.den.is_monomial:
            return None
        ((de, dc),) = self.den.items()
        return [(e - de, c / dc) for e, c in self.num.items()]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "BaseScalar | RationalLike") -> "BaseScalar":
        o = self._coerce(other)
        return BaseScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "BaseScalar":
        return BaseScalar(-self.num, self.den)

    def __sub__(self, other: "BaseScalar | RationalLike") -> "BaseScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "BaseScalar | RationalLike") -> "BaseScalar":
        return self._coerce(other) - self

    def __mul__(self, other: "BaseScalar | RationalLike") -> "BaseScalar":
        o = self._coerce(other)
        if self.num.is_zero or o.num.is_zero:
            return BaseScalar.zero()
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        # Cross-cancel between canonical factors: afterwards the product
        # pair can only share a power of u, which the valuation shift
        # removes, so the result is canonical without another gcd.
        if _needs_gcd(n1, d2):
            g = UPoly.gcd(n1, d2)
            if g.degree > 0:
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if _needs_gcd(n2, d1):
            g = UPoly.gcd(n2, d1)
            if g.degree > 0:
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        num = n1 * n2
        den = d1 * d2
        v = min(num.valuation, den.valuation)
        if v > 0:
            num = UPoly({e - v: c for e, c in num._c.items()})
            den = UPoly({e - v: c for e, c in den._c.items()})
        lc = den.leading
        if lc != 1:
            inv = 1 / lc
            num, den = num.scaled(inv), den.scaled(inv)
        return BaseScalar._canonical(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "BaseScalar":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(u)")
        # Swapping a canonical pair keeps it coprime; rescale to monic den.
        lc = self.num.leading
        if lc == 1:
            return BaseScalar._canonical(self.den, self.num)
        inv = 1 / lc
        return BaseScalar._canonical(self.den.scaled(inv), self.num.scaled(inv))

    def __truediv__(self, other: "BaseScalar | RationalLike") -> "BaseScalar":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: "BaseScalar | RationalLike") -> "BaseScalar":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "BaseScalar":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return BaseScalar.one()
        # Powers of a coprime pair stay coprime; a monic den stays monic.
        return BaseScalar._canonical(self.num**n, self.den**n)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BaseScalar.from_rational(other)
        if not isinstance(other, BaseScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        if self.den == UPoly.one():
            return f"BaseScalar({self.num!r})"
        return f"BaseScalar({self.num!r} / {self.den!r})"

    def __str__(self) -> str:
        from .render import scalar_text

        return scalar_text(self)


# Functional aliases for the kernel field operations.


def base_add(a: BaseScalar, b: BaseScalar) -> BaseScalar:
    return a + b


def base_mul(a: BaseScalar, b: BaseScalar) -> BaseScalar:
    return a * b


def base_div(a: BaseScalar, b: BaseScalar) -> BaseScalar:
    """Divide in Q(u); raises ZeroDivisionError when b = 0."""
    return a / b
