"""Tokenizer and recursive-descent parser for ring expressions.

Precedence, tightest first: ``^`` (nonnegative integer exponents), unary
minus, ``*`` and ``/`` (left associative), ``+`` and ``-``.  Products keep
operand order and ``a/b`` means ``a * b^-1``.  Juxtaposition is an error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Num | Sym | Neg | Bin | Pow

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(src: str) -> list[tuple[str, str, int]]:
    """List of (kind, text, position); kind is num, name, op or end."""
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str, symbols: frozenset[str] | None):
        self.tokens = tokenize(src)
        self.i = 0
        self.symbols = symbols

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str):
        kind, t, pos = self.take()
        if t != text or kind != "op":
            raise ParseError(f"expected {text!r}", pos)

    def parse(self) -> Expr:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        e = self.sum()
        kind, text, pos = self.peek()
        if kind != "end":
            if kind in ("num", "name") or text == "(":
                raise ParseError("missing operator (use explicit *)", pos)
            raise ParseError(f"unexpected {text!r}", pos)
        return e

    def sum(self) -> Expr:
        e = self.product()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            e = Bin(op, e, self.product())
        return e

    def product(self) -> Expr:
        e = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            e = Bin(op, e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, text, pos = self.take()
            if (kind, text) == ("op", "-"):
                raise ParseError("negative exponent", pos)
            paren = (kind, text) == ("op", "(")
            if paren:
                kind, text, pos = self.take()
                if (kind, text) == ("op", "-"):
                    raise ParseError("negative exponent", pos)
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            if paren:
                self.expect(")")
            if self.peek()[:2] == ("op", "^"):
                raise ParseError("chained exponents need parentheses", self.peek()[2])
            return Pow(base, int(text))
        return base

    def atom(self) -> Expr:
        kind, text, pos = self.take()
        if kind == "num":
            return Num(Fraction(int(text)))
        if kind == "name":
            if self.symbols is not None and text not in self.symbols:
                raise ParseError(f"unknown symbol {text!r}", pos)
            return Sym(text)
        if text == "(":
            e = self.sum()
            self.expect(")")
            return e
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {text!r}", pos)


def parse(src: str, symbols=None) -> Expr:
    """Parse ``src``; when ``symbols`` is given, other names are rejected."""
    return _Parser(src, frozenset(symbols) if symbols is not None else None).parse()
