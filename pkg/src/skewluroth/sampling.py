"""Seeded random elements for self-tests and property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .quatfunc import QuatFunc
from .ratfunc import Poly, RatFunc
from .scalars import GaussRat, Quaternion
from .skewfield import GAUSS, SkewFrac, SkewPoly, TwistConfig


def rand_rat(rng: random.Random, height: int = 10, denominators: bool = False) -> Fraction:
    num = rng.randint(-height, height)
    return Fraction(num, rng.randint(1, height)) if denominators else Fraction(num)


def rand_gauss(rng: random.Random, height: int = 10) -> GaussRat:
    return GaussRat(rng.randint(-height, height), rng.randint(-height, height))


def rand_quaternion(rng: random.Random, height: int = 10) -> Quaternion:
    return Quaternion(*(rng.randint(-height, height) for _ in range(4)))


def rand_skewpoly(rng: random.Random, max_degree: int = 6, height: int = 10,
                  config: TwistConfig = GAUSS, nonzero: bool = False) -> SkewPoly:
    pick = rand_gauss if config == GAUSS else rand_quaternion
    while True:
        deg = rng.randint(0, max_degree)
        coeffs = [pick(rng, height) for _ in range(deg + 1)]
        p = SkewPoly(config, coeffs)
        if p or not nonzero:
            return p


def rand_skewfrac(rng: random.Random, max_degree: int = 3, height: int = 5) -> SkewFrac:
    num = rand_skewpoly(rng, max_degree, height)
    den = rand_skewpoly(rng, max_degree, height, nonzero=True)
    return SkewFrac(num, den)


def rand_poly(rng: random.Random, max_degree: int = 4, height: int = 10, nonzero: bool = False) -> Poly:
    while True:
        p = Poly([rand_rat(rng, height) for _ in range(rng.randint(0, max_degree) + 1)])
        if p or not nonzero:
            return p


def rand_ratfunc(rng: random.Random, max_degree: int = 3, height: int = 5) -> RatFunc:
    return RatFunc(rand_poly(rng, max_degree, height), rand_poly(rng, max_degree, height, nonzero=True))


def _parity_ratfunc(rng: random.Random, odd: bool, max_degree: int = 2, height: int = 5) -> RatFunc:
    """r(X^2) or X*r(X^2) for a random r."""
    r = rand_ratfunc(rng, max_degree, height)
    x = RatFunc.x()
    out = r.compose(x * x)
    return out * x if odd else out


def rand_tau_fixed(rng: random.Random) -> QuatFunc:
    """Random element with a, b even and c, d odd."""
    return QuatFunc(*(_parity_ratfunc(rng, odd) for odd in (False, False, True, True)))


def rand_parity_violating(rng: random.Random) -> QuatFunc:
    """Random element with at least one component of the wrong parity."""
    while True:
        u = rand_tau_fixed(rng)
        comps = list(u.components())
        slot = rng.randrange(4)
        odd = slot < 2
        # add a nonzero piece of the wrong parity to one slot
        bad = _parity_ratfunc(rng, odd)
        if bad:
            comps[slot] = comps[slot] + bad
            v = QuatFunc(*comps)
            a, b, c, d = v.components()
            if not (a.is_even() and b.is_even() and c.is_odd() and d.is_odd()):
                return v


# -- expression trees over skew fractions ------------------------------------

def rand_expr_tree(rng: random.Random, depth: int = 5):
    """Nested tuples ('leaf', SkewPoly) | ('+'|'*'|'inv', ...) of depth <= depth."""
    if depth <= 1 or rng.random() < 0.3:
        return ("leaf", rand_skewpoly(rng, 2, 3))
    op = rng.choice(["+", "-", "*", "*", "inv"])
    if op == "inv":
        return ("inv", rand_expr_tree(rng, depth - 1))
    return (op, rand_expr_tree(rng, depth - 1), rand_expr_tree(rng, depth - 1))


def eval_tree(tree, leaf, one):
    """Evaluate with ``leaf`` mapping a SkewPoly into the target ring; None on 1/0."""
    tag = tree[0]
    if tag == "leaf":
        return leaf(tree[1])
    if tag == "inv":
        x = eval_tree(tree[1], leaf, one)
        if x is None or not x:
            return None
        return x.inv()
    a = eval_tree(tree[1], leaf, one)
    b = eval_tree(tree[2], leaf, one)
    if a is None or b is None:
        return None
    return a + b if tag == "+" else a - b if tag == "-" else a * b


def rand_ht_generator(rng: random.Random, max_degree: int = 4, height: int = 5) -> QuatFunc:
    """Random element of H(T) with polynomial or rational components of degree <= max_degree."""
    while True:
        comps = []
        for _ in range(4):
            if rng.random() < 0.4:
                comps.append(RatFunc())
            elif rng.random() < 0.7:
                comps.append(RatFunc(rand_poly(rng, max_degree, height)))
            else:
                comps.append(RatFunc(rand_poly(rng, max_degree, height),
                                     rand_poly(rng, max_degree, height, nonzero=True)))
        u = QuatFunc(*comps)
        if not u.is_constant():
            return u
