"""Half-integer bookkeeping.

Exponents of the twist character nu and endpoints of cuspidal segments are
half-integers.  They are stored as doubled integers so that all arithmetic
and comparisons stay exact and total.  The helpers here convert between the
doubled-int representation and `fractions.Fraction` at API boundaries.
"""

from __future__ import annotations

from fractions import Fraction

HalfLike = int | Fraction | str


def twice(value: HalfLike) -> int:
    """Return 2*value as an int, requiring value to be a half-integer."""
    f = Fraction(value)
    doubled = 2 * f
    if doubled.denominator != 1:
        raise ValueError(f"not a half-integer: {value!r}")
    return doubled.numerator


def as_fraction(twice_value: int) -> Fraction:
    return Fraction(twice_value, 2)


def parse_half(text: str) -> Fraction:
    """Parse '3', '-2' or '1/2' style half-integers."""
    try:
        f = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse half-integer {text!r}") from exc
    if (2 * f).denominator != 1:
        raise ValueError(f"not a half-integer: {text!r}")
    return f


def format_half(value: HalfLike) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
