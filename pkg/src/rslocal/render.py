"""Text, LaTeX and JSON serialization for scalars, rational functions, series.

Display always speaks in terms of q: the internal variable u is q^(1/2), so
u^(2k) renders as q^k and u^(2k+1) as q^(k+1/2).  JSON, in contrast, is a
faithful dump of the internal representation (powers of u with exact
rational coefficients as "p/q" strings), so serialized values round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RationalFunction, TruncatedSeries, XPoly
from .scalars import BaseScalar, UPoly

# -- JSON ------------------------------------------------------------------


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _upoly_json(p: UPoly) -> list[list]:
    return [[e, _frac_str(c)] for e, c in p.items()]


def _upoly_from_json(terms) -> UPoly:
    return UPoly({int(e): Fraction(c) for e, c in terms})


def scalar_to_json(s: BaseScalar) -> dict:
    """{"num": [[exp, "p/q"], ...], "den": ...} with exponents powers of u."""
    return {"num": _upoly_json(s.num), "den": _upoly_json(s.den)}


def scalar_from_json(data: dict) -> BaseScalar:
    return BaseScalar(_upoly_from_json(data["num"]), _upoly_from_json(data["den"]))


def rf_to_json(r: RationalFunction) -> dict:
    """{"var": "X", "num": [scalar, ...], "den": [...]} ascending powers."""
    return {
        "var": "X",
        "num": [scalar_to_json(c) for c in r.num.coeffs],
        "den": [scalar_to_json(c) for c in r.den.coeffs],
    }


def rf_from_json(data: dict) -> RationalFunction:
    num = XPoly([scalar_from_json(c) for c in data["num"]])
    den = XPoly([scalar_from_json(c) for c in data["den"]])
    return RationalFunction(num, den)


def series_to_json(ts: TruncatedSeries) -> dict:
    return {
        "var": "X",
        "order": ts.order,
        "coefficients": [scalar_to_json(c) for c in ts.coeffs],
    }


# -- q-power formatting -------------------------------------------------------


def _q_exponent_str(u_exp: int) -> str:
    # u^(2k) is q^k, u^(2k+1) is q^(k+1/2); keep the exponent as n or n/2.
    if u_exp % 2 == 0:
        return str(u_exp // 2)
    return f"{u_exp}/2"


def _q_monomial(u_exp: int, latex: bool) -> str:
    if u_exp == 0:
        return "1"
    e = _q_exponent_str(u_exp)
    if e == "1":
        return "q"
    if latex:
        return f"q^{{{e}}}"
    return f"q^({e})" if "/" in e or e.startswith("-") else f"q^{e}"


def _coeff_monomial(c: Fraction, u_exp: int, latex: bool) -> str:
    mono = _q_monomial(u_exp, latex)
    if mono == "1":
        return _frac_text(c, latex)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    sep = "" if latex else "*"
    return f"{_frac_text(c, latex)}{sep}{mono}"


def _frac_text(f: Fraction, latex: bool) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    if latex:
        sign = "-" if f < 0 else ""
        return f"{sign}\\tfrac{{{abs(f.numerator)}}}{{{f.denominator}}}"
    return f"{f.numerator}/{f.denominator}"


def _laurent_sum(terms: list[tuple[int, Fraction]], latex: bool) -> str:
    # Terms of a Laurent polynomial in q^(1/2), highest power first.
    parts = []
    for e, c in sorted(terms, reverse=True):
        s = _coeff_monomial(c, e, latex)
        if parts:
            if s.startswith("-"):
                parts.append(" - " + s[1:])
            else:
                parts.append(" + " + s)
        else:
            parts.append(s)
    return "".join(parts) if parts else "0"


def _scalar_str(s: BaseScalar, latex: bool) -> str:
    laurent = s.as_laurent()
    if laurent is not None:
        return _laurent_sum(laurent, latex)
    num = _laurent_sum(list(s.num.items()), latex)
    den = _laurent_sum(list(s.den.items()), latex)
    if latex:
        return f"\\frac{{{num}}}{{{den}}}"
    return f"({num})/({den})"


def scalar_text(s: BaseScalar) -> str:
    return _scalar_str(s, latex=False)


def scalar_latex(s: BaseScalar) -> str:
    return _scalar_str(s, latex=True)


def _is_simple_scalar(s: BaseScalar) -> bool:
    laurent = s.as_laurent()
    return laurent is not None and len(laurent) <= 1


def _xpoly_str(p: XPoly, latex: bool) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c.is_zero:
            continue
        if k == 0:
            term = _scalar_str(c, latex)
        else:
            x = "X" if k == 1 else (f"X^{{{k}}}" if latex else f"X^{k}")
            if c.is_one:
                term = x
            elif (-c).is_one:
                term = f"-{x}"
            else:
                cs = _scalar_str(c, latex)
                if not _is_simple_scalar(c):
                    cs = f"({cs})" if not latex else f"\\left({cs}\\right)"
                term = f"{cs}{'' if latex else '*'}{x}"
        if parts and not term.startswith("-"):
            parts.append(" + " + term)
        elif parts:
            parts.append(" - " + term[1:])
        else:
            parts.append(term)
    return "".join(parts)


def xpoly_text(p: XPoly) -> str:
    return _xpoly_str(p, latex=False)


def rf_text(r: RationalFunction) -> str:
    if r.den == XPoly.one():
        return _xpoly_str(r.num, latex=False)
    return f"({_xpoly_str(r.num, False)})/({_xpoly_str(r.den, False)})"


def rf_latex(r: RationalFunction) -> str:
    if r.den == XPoly.one():
        return _xpoly_str(r.num, latex=True)
    return f"\\frac{{{_xpoly_str(r.num, True)}}}{{{_xpoly_str(r.den, True)}}}"


def series_text(ts: TruncatedSeries) -> str:
    body = _xpoly_str(XPoly(ts.coeffs), latex=False) if any(
        not c.is_zero for c in ts.coeffs
    ) else "0"
    return f"{body} + O(X^{ts.order + 1})"
