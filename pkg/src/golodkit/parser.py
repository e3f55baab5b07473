"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive, maximal-munch tokens)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := int | ident | '(' expr ')' | '-' base

Implicit multiplication is a vocabulary error, not a product: ``x y``
and ``2x`` are rejected, and ``xy`` is a single (unknown) identifier.
"""

from __future__ import annotations

from .errors import ParseError
from .poly import Polynomial, PolyContext

_TOK_INT = "int"
_TOK_IDENT = "ident"
_TOK_OP = "op"
_TOK_END = "end"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append((_TOK_INT, text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append((_TOK_IDENT, text[i:j], i))
            i = j
        elif c in "+-*^()":
            toks.append((_TOK_OP, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    toks.append((_TOK_END, "", n))
    return toks


class _Parser:
    def __init__(self, text: str, context: PolyContext):
        self.toks = _tokenize(text)
        self.pos = 0
        self.context = context

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str):
        kind, val, at = self.peek()
        if kind != _TOK_OP or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", at)
        return self.advance()

    def parse_expr(self) -> Polynomial:
        acc = self.parse_term()
        while True:
            kind, val, _ = self.peek()
            if kind == _TOK_OP and val in "+-":
                self.advance()
                rhs = self.parse_term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def parse_term(self) -> Polynomial:
        acc = self.parse_factor()
        while True:
            kind, val, _ = self.peek()
            if kind == _TOK_OP and val == "*":
                self.advance()
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> Polynomial:
        b = self.parse_base()
        kind, val, _ = self.peek()
        if kind == _TOK_OP and val == "^":
            self.advance()
            kind, val, at = self.peek()
            if kind != _TOK_INT:
                raise ParseError(
                    "exponent must be a non-negative integer literal", at
                )
            self.advance()
            return b ** int(val)
        return b

    def parse_base(self) -> Polynomial:
        kind, val, at = self.peek()
        if kind == _TOK_INT:
            self.advance()
            return self.context.constant(int(val))
        if kind == _TOK_IDENT:
            self.advance()
            if val not in self.context.variables:
                raise ParseError(f"unknown variable {val!r}", at)
            return self.context.variable(val)
        if kind == _TOK_OP and val == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == _TOK_OP and val == "-":
            self.advance()
            return -self.parse_base()
        raise ParseError(f"unexpected {val or 'end of input'!r}", at)


def parse_poly(text: str, context: PolyContext) -> Polynomial:
    """Parse ``text`` into a polynomial over ``context``."""
    p = _Parser(text, context)
    result = p.parse_expr()
    kind, val, at = p.peek()
    if kind != _TOK_END:
        raise ParseError(f"trailing input {val!r}", at)
    return result
