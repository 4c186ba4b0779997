"""Evaluate parsed expressions in one of the supported rings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import PreconditionError
from ..quatfunc import QuatFunc
from ..scalars import I, QI, QJ, QK, Quaternion
from ..skewfield import CENTRAL, GAUSS, SkewFrac, TwistConfig
from .parser import Bin, Expr, Neg, Num, Pow, Sym, parse


@dataclass(frozen=True)
class Ring:
    name: str
    symbols: frozenset[str]
    const: Callable
    symbol: Callable[[str], object]


def _skew_ring(name: str, config: TwistConfig, symbols: str) -> Ring:
    units = {"i": QI, "j": QJ, "k": QK}

    def symbol(s: str):
        if s == "T":
            return SkewFrac.t(config)
        if config == GAUSS:
            return SkewFrac.const(config, I)
        return SkewFrac.const(config, units[s])

    return Ring(name, frozenset(symbols.split()), lambda c: SkewFrac.const(config, c), symbol)


def _hx_symbol(s: str) -> QuatFunc:
    if s == "X":
        return QuatFunc.x()
    return QuatFunc(*{"i": QI, "j": QJ, "k": QK}[s].components())


RINGS = {
    "ctsigma": _skew_ring("ctsigma", GAUSS, "T i"),
    "ht": _skew_ring("ht", CENTRAL, "T i j k"),
    "hx": Ring("hx", frozenset("X i j k".split()), QuatFunc, _hx_symbol),
}

QUATERNION_SYMBOLS = frozenset("i j k".split())


def inner_ring(b: Quaternion) -> Ring:
    return _skew_ring(f"inner({b})", TwistConfig.inner(b), "T i j k")


def evaluate(e: Expr, ring: Ring):
    if isinstance(e, Num):
        return ring.const(e.value)
    if isinstance(e, Sym):
        if e.name not in ring.symbols:
            raise PreconditionError(f"symbol {e.name!r} does not belong to ring {ring.name}")
        return ring.symbol(e.name)
    if isinstance(e, Neg):
        return -evaluate(e.operand, ring)
    if isinstance(e, Pow):
        base = evaluate(e.base, ring)
        out = ring.const(1)
        for _ in range(e.exponent):
            out = out * base
        return out
    if isinstance(e, Bin):
        a, b = evaluate(e.left, ring), evaluate(e.right, ring)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if not b:
            raise ZeroDivisionError("division by zero")
        # right fraction a * b^-1
        return a * b.inv()
    raise TypeError(f"not an expression node: {e!r}")


def parse_in(src: str, ring: Ring):
    return evaluate(parse(src, ring.symbols), ring)


def parse_quaternion(src: str) -> Quaternion:
    """A constant quaternion such as ``j`` or ``1+2*k``."""
    value = evaluate(parse(src, QUATERNION_SYMBOLS), RINGS["ht"])
    if not value.is_constant():
        raise PreconditionError("expected a constant quaternion")
    return value.num.coeffs[0] if value else Quaternion(0)
