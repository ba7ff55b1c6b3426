"""Recursive-descent parser for univariate rational polynomials.

Grammar (whitespace-insensitive, `*` optional before an atom):

    expr   := unary (('+' | '-') unary)*
    unary  := ('+' | '-') unary | term
    term   := power (('*' | '/')? power)*
    power  := atom ('^' INT)?
    atom   := INT | 'X' | '(' expr ')'

Division is only allowed by a nonzero constant, so `1/2*X^2 + X - 3` works.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from ..errors import ParseError
from .poly import PolyQ

_TOKEN = re.compile(r"\s*(?:(\d+)|([Xx])|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif var is not None:
            tokens.append(("var", "X"))
        elif op in "+-*/^()":
            tokens.append(("op", op))
        else:
            raise ParseError(f"unexpected character {op!r} at position {m.start(3)}")
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            got = tok[1] if tok[0] else "end of input"
            raise ParseError(f"expected {want}, got {got} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> PolyQ:
        if not self.tokens:
            raise ParseError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return p

    def expr(self) -> PolyQ:
        acc = self.unary()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.unary()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def unary(self) -> PolyQ:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.term()

    def _starts_atom(self) -> bool:
        kind, val = self.peek()
        return kind in ("num", "var") or (kind, val) == ("op", "(")

    def term(self) -> PolyQ:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif tok == ("op", "/"):
                self.take()
                d = self.power()
                if d.deg != 0:
                    raise ParseError(f"division by a non-constant in {self.text!r}")
                acc = acc * (1 / d.lc)
            elif self._starts_atom():
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> PolyQ:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = int(self.take("num")[1])
            return base ** e
        return base

    def atom(self) -> PolyQ:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return PolyQ.const(int(val))
        if kind == "var":
            self.take()
            return PolyQ.x()
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        got = val if kind else "end of input"
        raise ParseError(f"unexpected {got!r} in {self.text!r}")


def parse_poly(text: str) -> PolyQ:
    """Parse text like `X^6 - 2` or `1/2*X^2 + X - 3`."""
    if not isinstance(text, str):
        raise ParseError("polynomial must be a string")
    return _Parser(text).parse()


def poly_to_json(f: PolyQ) -> str:
    """Canonical JSON: array of coefficient strings, ascending degree."""
    return json.dumps(f.to_json())


def poly_from_json(text: str) -> PolyQ:
    try:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(c, str) for c in data):
            raise ParseError("expected a JSON array of coefficient strings")
        return PolyQ(Fraction(c) for c in data)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
