"""Text grammar for segments and representation descriptors.

    expression := item ( "x" item )*
    item       := segment | standard
    segment    := "[" half "," half "]" "@" cuspidal
    standard   := ("St" | "Sigma" | "Sp") "(" int ")" "@" cuspidal
    cuspidal   := name ["^"] [ "(" param ("," param)* ")" ] ["^"]
    param      := "r" "=" int | "d" "=" int | "tw" "=" half | "dual"
    half       := ["-"] int [ "/" 2 ]

Examples: "St(3)@rho", "Sigma(2)@rho^", "[0,2]@rho(r=2,d=2)",
"[0,1]@rho x [1,2]@rho".  The name "x" is reserved as the product
separator.  Omitted parameters default to r = 1, d = 1, tw = 0.

A bare segment parses to a Segment; a bare St/Sigma/Sp to the matching
descriptor; a product to a PRODUCT descriptor whose factors are discrete
series (segments, or St items folded into their segments).  Speh and full
induced kinds cannot appear inside products.

Syntax problems raise ParseError with the character position and the
expected tokens; well-formed input with inconsistent data (for example a
self-twist order not dividing the degree) raises SemanticError instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .halfint import format_half, twice
from .segments import CuspidalDatum, Kind, RepDescriptor, Segment

_KINDS = {"St": Kind.STEINBERG, "Sigma": Kind.SIGMA, "Sp": Kind.SPEH}
_PUNCT = "[](),@^=/"


class ParseError(ValueError):
    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(
            f"expected {expected} at position {position}, found {found}"
        )


class SemanticError(ValueError):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "int" | punctuation | "end"
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT or c == "-":
            tokens.append(_Token(c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
            continue
        raise ParseError(i, "a token", f"{c!r}")
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, expected: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                tok.position,
                expected or repr(kind),
                repr(tok.text) if tok.text else "end of input",
            )
        return self.advance()

    def fail(self, expected: str):
        tok = self.peek()
        raise ParseError(
            tok.position, expected, repr(tok.text) if tok.text else "end of input"
        )

    # -- grammar ----------------------------------------------------------

    def parse_int(self) -> int:
        return int(self.expect("int", "an integer").text)

    def parse_half(self) -> Fraction:
        sign = 1
        if self.peek().kind == "-":
            self.advance()
            sign = -1
        tok = self.expect("int", "an integer or half-integer")
        value = Fraction(sign * int(tok.text))
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("int", "a denominator")
            den = int(den_tok.text)
            if den not in (1, 2):
                raise SemanticError(
                    den_tok.position, f"denominator must be 1 or 2, got {den}"
                )
            value = Fraction(sign * int(tok.text), den)
        return value

    def parse_cuspidal(self) -> CuspidalDatum:
        name_tok = self.expect("ident", "a cuspidal name")
        name = name_tok.text
        if name == "x":
            raise SemanticError(name_tok.position, "'x' is reserved for products")
        dual = False
        if self.peek().kind == "^":
            self.advance()
            dual = True
        degree, torsion = 1, 1
        tw = Fraction(0)
        if self.peek().kind == "(":
            self.advance()
            while True:
                key_tok = self.expect("ident", "a parameter (r, d, tw or dual)")
                key = key_tok.text
                if key == "dual":
                    dual = True
                elif key in ("r", "d", "tw"):
                    self.expect("=", "'='")
                    if key == "r":
                        degree = self.parse_int()
                    elif key == "d":
                        torsion = self.parse_int()
                    else:
                        tw = self.parse_half()
                else:
                    raise ParseError(
                        key_tok.position, "one of r, d, tw, dual", repr(key)
                    )
                if self.peek().kind == ",":
                    self.advance()
                    continue
                break
            self.expect(")", "')'")
        if self.peek().kind == "^":
            self.advance()
            dual = True
        try:
            return CuspidalDatum(degree, torsion, name, dual, twice(tw))
        except ValueError as exc:
            raise SemanticError(name_tok.position, str(exc)) from exc

    def parse_item(self) -> Segment | RepDescriptor:
        tok = self.peek()
        if tok.kind == "[":
            self.advance()
            a = self.parse_half()
            self.expect(",", "','")
            b = self.parse_half()
            self.expect("]", "']'")
            self.expect("@", "'@'")
            datum = self.parse_cuspidal()
            try:
                return Segment(datum, twice(a), twice(b))
            except ValueError as exc:
                raise SemanticError(tok.position, str(exc)) from exc
        if tok.kind == "ident" and tok.text in _KINDS:
            self.advance()
            self.expect("(", "'('")
            length_tok = self.peek()
            length = self.parse_int()
            self.expect(")", "')'")
            self.expect("@", "'@'")
            datum = self.parse_cuspidal()
            if length < 1:
                raise SemanticError(length_tok.position, "length must be >= 1")
            kind = _KINDS[tok.text]
            return RepDescriptor(kind, (Segment.centered(datum, length),))
        self.fail("a segment '[' or one of St, Sigma, Sp")

    def parse_expression(self) -> Segment | RepDescriptor:
        positions = [self.peek().position]
        items = [self.parse_item()]
        while self.peek().kind == "ident" and self.peek().text == "x":
            self.advance()
            positions.append(self.peek().position)
            items.append(self.parse_item())
        end = self.peek()
        if end.kind != "end":
            raise ParseError(
                end.position, "'x' or end of input", repr(end.text)
            )
        if len(items) == 1:
            return items[0]
        factors = []
        for item, pos in zip(items, positions):
            if isinstance(item, Segment):
                factors.append(item)
            elif item.kind is Kind.STEINBERG:
                factors.append(item.segment)
            else:
                raise SemanticError(
                    pos,
                    f"{item.kind.value} factors are not discrete series; "
                    "products take segments or St items",
                )
        return RepDescriptor.product(factors)


def parse_descriptor(text: str) -> Segment | RepDescriptor:
    """Parse a segment or descriptor expression; see the module grammar."""
    return _Parser(text).parse_expression()


def _format_datum(datum: CuspidalDatum) -> str:
    params = []
    if datum.degree != 1:
        params.append(f"r={datum.degree}")
    if datum.torsion != 1:
        params.append(f"d={datum.torsion}")
    if datum.twice_twist != 0:
        params.append(f"tw={format_half(datum.twist)}")
    out = datum.label
    if datum.dual:
        out += "^"
    if params:
        out += "(" + ",".join(params) + ")"
    return out


def _format_segment(seg: Segment) -> str:
    return f"[{format_half(seg.a)},{format_half(seg.b)}]@{_format_datum(seg.datum)}"


def format_descriptor(obj: Segment | RepDescriptor) -> str:
    """Canonical text form; parsing it back yields an equal value.

    Single-segment descriptors print with a centered segment, folding any
    off-center translation into the datum twist; products print their
    factors as segments.  A one-factor product prints as its bare segment.
    """
    if isinstance(obj, Segment):
        return _format_segment(obj)
    if obj.kind is Kind.PRODUCT:
        if len(obj.segments) == 1:
            return _format_segment(obj.segments[0])
        return " x ".join(_format_segment(s) for s in obj.segments)
    seg = obj.segment
    center = Fraction(seg.twice_a + seg.twice_b, 4)
    datum = seg.datum.twisted(center) if center else seg.datum
    return f"{obj.kind.value}({seg.length})@{_format_datum(datum)}"
