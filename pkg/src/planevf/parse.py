"""Parser and printer for the vector-field input grammar.

    field := term (('+'|'-') term)*
    term  := coeff? mono* ('Dx'|'Dy')
    mono  := ('x'|'y') ('^' nat)?
    coeff := int | int '/' int | '(' int ('+'|'-') int 'i' ')'

Whitespace is insignificant and '*' may separate factors.  Printing emits the
canonical form (graded-lex sorted monomials, Dx terms before Dy terms), and
parse(print(f)) == f holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import BiPoly, GaussRat
from .fields import PolyVectorField


class ParseError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch in "+-^/()*":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if text.startswith("Dx", i):
            tokens.append(_Token("Dx", "Dx", line, col))
            i += 2
            col += 2
            continue
        if text.startswith("Dy", i):
            tokens.append(_Token("Dy", "Dy", line, col))
            i += 2
            col += 2
            continue
        if ch in "xyi":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: Optional[str] = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text or 'end of input'}",
                             tok.line, tok.column)
        self.pos += 1
        return tok

    def _skip_stars(self):
        while self.peek().kind == "*":
            self.take()

    def parse_field(self):
        terms = []
        sign = 1
        if self.peek().kind in "+-":
            if self.take().kind == "-":
                sign = -1
        terms.append(self.parse_term(sign))
        while self.peek().kind in "+-":
            sign = 1 if self.take().kind == "+" else -1
            terms.append(self.parse_term(sign))
        self.take("eof")
        return terms

    def parse_term(self, sign: int):
        coeff = GaussRat(sign)
        tok = self.peek()
        if tok.kind == "int":
            coeff = coeff * self._rational()
            self._skip_stars()
        elif tok.kind == "(":
            coeff = coeff * self._gaussian()
            self._skip_stars()
        ex = ey = 0
        while self.peek().kind in ("x", "y"):
            var = self.take().kind
            power = 1
            if self.peek().kind == "^":
                self.take()
                power = int(self.take("int").text)
            if var == "x":
                ex += power
            else:
                ey += power
            self._skip_stars()
        tok = self.peek()
        if tok.kind not in ("Dx", "Dy"):
            raise ParseError("expected Dx or Dy", tok.line, tok.column)
        comp = self.take().kind
        return comp, (ex, ey), coeff

    def _rational(self) -> GaussRat:
        num = int(self.take("int").text)
        if self.peek().kind == "/":
            self.take()
            den = int(self.take("int").text)
            if den == 0:
                tok = self.tokens[self.pos - 1]
                raise ParseError("zero denominator", tok.line, tok.column)
            return GaussRat(Fraction(num, den))
        return GaussRat(num)

    def _gaussian(self) -> GaussRat:
        self.take("(")
        re = int(self.take("int").text)
        sign_tok = self.take()
        if sign_tok.kind not in "+-":
            raise ParseError("expected + or - in Gaussian literal",
                             sign_tok.line, sign_tok.column)
        im = int(self.take("int").text)
        if sign_tok.kind == "-":
            im = -im
        self.take("i")
        self.take(")")
        return GaussRat(re, im)


def parse_polynomial(text: str) -> BiPoly:
    """Parse a bare polynomial (the term grammar without Dx/Dy)."""
    padded = " ".join(t + " Dx" for t in _split_top_level(text))
    field = parse_field(padded, allow_zero=True)
    return field[0]


def _split_top_level(text: str):
    # split a polynomial into signed terms so each can borrow the Dx marker
    parts = []
    cur = ""
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        if ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip():
            parts.append(cur)
            cur = ch
        else:
            cur += ch
    if cur.strip():
        parts.append(cur)
    return parts or ["0"]


def parse_field(text: str, allow_zero: bool = False):
    """Parse the field grammar into (p_comp, q_comp) BiPoly pair."""
    terms = _Parser(_tokenize(text)).parse_field()
    px: dict = {}
    qy: dict = {}
    for comp, mono, coeff in terms:
        target = px if comp == "Dx" else qy
        acc = target.get(mono, GaussRat(0)) + coeff
        if acc.is_zero():
            target.pop(mono, None)
        else:
            target[mono] = acc
    p, q = BiPoly(px), BiPoly(qy)
    if allow_zero:
        return p, q
    if p.is_zero() and q.is_zero():
        raise ParseError("zero field", 1, 1)
    return p, q


def parse_vector_field(text: str) -> PolyVectorField:
    p, q = parse_field(text)
    return PolyVectorField(p, q)


def _format_coeff(c: GaussRat) -> str:
    if c.im:
        re, im = c.re, c.im
        sign = "+" if im >= 0 else "-"
        return f"({re}{sign}{abs(im)}i)"
    return str(c.re)


def _format_term(mono, coeff: GaussRat, comp: str, first: bool) -> str:
    i, j = mono
    body = []
    if i:
        body.append("x" if i == 1 else f"x^{i}")
    if j:
        body.append("y" if j == 1 else f"y^{j}")
    neg = False
    c = coeff
    if not c.im and c.re < 0:
        neg = True
        c = -c
    cs = _format_coeff(c)
    if cs == "1" and body:
        cs = ""
    factors = "*".join(([cs] if cs else []) + body) or "1"
    head = ("-" if neg else "") if first else (" - " if neg else " + ")
    return f"{head}{factors} {comp}"


def format_field(field: PolyVectorField) -> str:
    """Canonical printable form: graded-lex descending, Dx before Dy."""
    from .algebra import _grlex_key

    out = []
    first = True
    for comp, poly in (("Dx", field.p_comp), ("Dy", field.q_comp)):
        for mono in sorted(poly.terms, key=_grlex_key, reverse=True):
            out.append(_format_term(mono, poly.terms[mono], comp, first))
            first = False
    return "".join(out)


def format_polynomial(p: BiPoly) -> str:
    from .algebra import _grlex_key

    if p.is_zero():
        return "0"
    out = []
    first = True
    for mono in sorted(p.terms, key=_grlex_key, reverse=True):
        term = _format_term(mono, p.terms[mono], "", first)
        out.append(term.rstrip())
        first = False
    return "".join(out)
