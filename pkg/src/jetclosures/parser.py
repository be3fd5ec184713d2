"""Text parser for polynomial expressions.

Grammar (whitespace insensitive):

    expr    := ['+'|'-'] term { ('+'|'-') term }
    term    := factor { '*' factor }
    factor  := atom [ '^' INT ]
    atom    := literal | NAME | '(' expr ')'
    literal := INT [ '/' INT ]

Integer literals are unbounded; a ``/`` between two integer literals
denotes an exact rational (reduced automatically, and inverted modulo p
over a prime field).  Implicit multiplication is a syntax error, as is
an exponent that is not a plain nonnegative integer literal.  Variable
names must belong to the ring.  Parsing then printing then parsing is
the identity on canonical forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import Polynomial, RingContext

EXPONENT_LIMIT = 4096

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:@\d+)?)|(?P<op>[-+*^/()]))"
)


class PolynomialSyntaxError(ValueError):
    """Syntax error with the offending position in the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass
class _Token:
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise PolynomialSyntaxError(f"unexpected character {text[bad_at]!r}", bad_at)
        for kind in ("int", "name", "op"):
            got = m.group(kind)
            if got is not None:
                tokens.append(_Token(kind, got, m.start(kind)))
                break
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise PolynomialSyntaxError(f"expected {op!r}", tok.pos)
        return self.advance()

    # grammar rules

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise PolynomialSyntaxError(f"unexpected {tok.text!r}", tok.pos)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            sign = -1 if tok.text == "-" else 1
        total = self.term()
        if sign < 0:
            total = -total
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                total = total + rhs if tok.text == "+" else total - rhs
            else:
                return total

    def term(self) -> Polynomial:
        total = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                total = total * self.factor()
            elif tok.kind in ("int", "name") or (tok.kind == "op" and tok.text == "("):
                raise PolynomialSyntaxError(
                    "missing operator (implicit multiplication is not allowed)", tok.pos
                )
            else:
                return total

    def factor(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            etok = self.peek()
            if etok.kind != "int":
                raise PolynomialSyntaxError("exponent must be a nonnegative integer literal", etok.pos)
            self.advance()
            e = int(etok.text)
            if e > EXPONENT_LIMIT:
                raise PolynomialSyntaxError(
                    f"exponent {e} exceeds the limit {EXPONENT_LIMIT}", etok.pos
                )
            return base ** e
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.advance()
                dtok = self.peek()
                if dtok.kind != "int":
                    raise PolynomialSyntaxError("expected an integer denominator", dtok.pos)
                self.advance()
                den = int(dtok.text)
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", dtok.pos)
                try:
                    value = self.ring.field.from_fraction(num, den)
                except ZeroDivisionError as exc:
                    raise PolynomialSyntaxError(str(exc), dtok.pos) from None
                return self.ring.constant(value)
            return self.ring.constant(num)
        if tok.kind == "name":
            self.advance()
            if tok.text not in self.ring.variables:
                raise PolynomialSyntaxError(f"unknown variable {tok.text!r}", tok.pos)
            return self.ring.variable(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolynomialSyntaxError(
            f"expected a literal, variable or parenthesis, got {tok.text!r}"
            if tok.kind != "end"
            else "unexpected end of input",
            tok.pos,
        )


def poly_parse(text: str, ring: RingContext) -> Polynomial:
    """Parse an expression into the canonical polynomial of the ring."""
    return _Parser(text, ring).parse()
