"""Parser for polynomial input strings.

Accepted syntax: the two variable names (``x`` and ``y`` by default), integer
and rational ``p/q`` literals, ``+ - * ^`` with nonnegative integer exponents,
parentheses, and unary minus.  Multiplication is always explicit: ``2*x*y``,
never ``2xy``.

>>> parse_poly("x^2*y - 3*x + 1/2").total_degree
3
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .bpoly import BPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()/]))")


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError(f"bad character at position {pos}: {text[pos]!r}")
        pos = m.end()
        if m.group(1):
            out.append(("num", m.group(1)))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
    return out


class _Parser:
    def __init__(self, tokens: List[Tuple[str, str]], vars: Tuple[str, str]):
        self.tokens = tokens
        self.pos = 0
        self.vars = vars

    def peek(self) -> Tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise PolyParseError(f"expected {op!r}, got {tok[1]!r}")

    def parse_expr(self) -> BPoly:
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok in (("op", "+"), ("op", "-")):
                self.take()
                rhs = self.parse_term()
                node = node + rhs if tok[1] == "+" else node - rhs
            else:
                return node

    def parse_term(self) -> BPoly:
        node = self.parse_power()
        while self.peek() == ("op", "*"):
            self.take()
            node = node * self.parse_power()
        return node

    def parse_power(self) -> BPoly:
        base = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise PolyParseError("exponent must be a nonnegative integer")
            return base ** int(tok[1])
        return base

    def parse_atom(self) -> BPoly:
        tok = self.take()
        if tok == ("op", "-"):
            return -self.parse_power()
        if tok == ("op", "+"):
            return self.parse_power()
        if tok == ("op", "("):
            node = self.parse_expr()
            self.expect_op(")")
            return node
        if tok[0] == "num":
            value = Fraction(int(tok[1]))
            if self.peek() == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or int(den[1]) == 0:
                    raise PolyParseError("denominator must be a nonzero integer")
                value = Fraction(int(tok[1]), int(den[1]))
            return BPoly.const(value, self.vars)
        if tok[0] == "name":
            if tok[1] == self.vars[0]:
                return BPoly.var1(self.vars)
            if tok[1] == self.vars[1]:
                return BPoly.var2(self.vars)
            raise PolyParseError(f"unknown variable {tok[1]!r} "
                                 f"(expected {self.vars[0]} or {self.vars[1]})")
        raise PolyParseError(f"unexpected token {tok[1]!r}")


def parse_poly(text: str, vars: Tuple[str, str] = ("x", "y")) -> BPoly:
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial")
    parser = _Parser(tokens, vars)
    out = parser.parse_expr()
    if parser.peek() is not None:
        raise PolyParseError(f"trailing input from token {parser.pos}")
    return out


def poly_to_string(p: BPoly) -> str:
    return str(p)
