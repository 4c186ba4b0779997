"""Constructive Lüroth theorem for subfields of K(X).

For nonconstant f = P/Q the polynomial P(Z)Q(X) - P(X)Q(Z), read in Z over
K(X), is (up to a unit) the minimal polynomial of X over K(f).  The monic gcd
of two such polynomials is the minimal polynomial of X over K(f, g); its
degree is [K(X) : K(f, g)] and any nonconstant coefficient generates K(f, g).

Inside this module the polynomial variable is called Z and coefficients are
rational functions in the original variable.
"""

from __future__ import annotations

from functools import reduce
from itertools import product
from typing import Iterable, Sequence

from .errors import PreconditionError
from .linalg import nullspace
from .ratfunc import Poly, RatFunc, poly_gcd, rf_compose


def _near_separated(f: RatFunc) -> list[Poly]:
    """P(Z)Q(X) - P(X)Q(Z) as a Z-coefficient list of polynomials in X."""
    P, Q = f.num, f.den
    n = max(len(P), len(Q))
    return [Q * P[i] - P * Q[i] for i in range(n)]


# Polynomials in Z over K[X] are plain lists of Poly, trailing zeros trimmed.

def _trim(a: list[Poly]) -> list[Poly]:
    while a and not a[-1]:
        a = a[:-1]
    return a


def _primitive(a: list[Poly]) -> list[Poly]:
    content = reduce(lambda g, c: poly_gcd(g, c) if c else g, a, Poly())
    if len(content) > 1:
        a = [c // content for c in a]
    lc = a[-1].lc
    if lc != 1:
        inv = 1 / lc
        a = [c * inv for c in a]
    return a


def _prem(a: list[Poly], b: list[Poly]) -> list[Poly]:
    """Pseudo-remainder of a by b in K[X][Z]."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[shift + i] = r[shift + i] - lr * bc
        r = _trim(r)
    return r


def _bivariate_gcd(a: list[Poly], b: list[Poly]) -> list[Poly]:
    """Primitive gcd in K[X][Z] (primitive pseudo-remainder sequence)."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return a


def _specialized_gcd_degree(a: list[Poly], b: list[Poly]) -> int | None:
    """deg gcd(a(x0), b(x0)) at a point x0 where both leading coefficients survive.

    This is an upper bound for the degree of the gcd over K(X).
    """
    for k in range(64):
        x0 = (k + 1) // 2 * (1 if k % 2 else -1)
        if a[-1](x0) and b[-1](x0):
            sa = Poly([c(x0) for c in a])
            sb = Poly([c(x0) for c in b])
            return len(poly_gcd(sa, sb)) - 1
    return None


def _minpoly_gcd_lists(polys: list[list[Poly]]) -> list[Poly]:
    g = polys[0]
    for p in polys[1:]:
        bound = _specialized_gcd_degree(g, p)
        if bound == 1:
            # X is always a common root, so the gcd is exactly Z - X
            g = [Poly((0, -1)), Poly.const(1)]
        else:
            g = _bivariate_gcd(g, p)
    return g


def _to_monic_ratfunc(g: list[Poly]) -> Poly:
    lc = g[-1]
    return Poly([RatFunc(c, lc) for c in g])


def minimal_poly_gcd(f: RatFunc, g: RatFunc) -> Poly:
    """Monic gcd in K(X)[Z] of the near-separated polynomials of f and g.

    Returned as a polynomial in Z whose coefficients are ``RatFunc`` in X.
    """
    if f.is_constant() or g.is_constant():
        raise PreconditionError("minimal_poly_gcd needs nonconstant inputs")
    return _to_monic_ratfunc(_minpoly_gcd_lists([_near_separated(f), _near_separated(g)]))


def _canonical(t: RatFunc) -> RatFunc:
    lc = t.num.lc
    return t if lc == 1 else t * (1 / lc)


def generator_from_minpoly(m: Poly) -> RatFunc:
    """Pick the nonconstant coefficient of minimal degree (lowest index on ties)."""
    best = None
    for c in m.coeffs:
        if not c.is_constant() and (best is None or c.degree < best.degree):
            best = c
    if best is None:
        raise PreconditionError("minimal polynomial has constant coefficients only")
    return _canonical(best)


def _join(t: RatFunc, g: RatFunc) -> RatFunc:
    if g.is_constant():
        return t
    m = minimal_poly_gcd(t, g)
    if len(m) - 1 == t.degree:
        # g already lies in K(t)
        return t
    return generator_from_minpoly(m)


def luroth_generator(gens: Sequence[RatFunc]) -> RatFunc:
    """A single generator t with K(t) = K(gens); rf_degree(t) = [K(X) : K(gens)]."""
    gens = list(gens)
    if not gens:
        raise PreconditionError("empty generator list")
    nonconst = [g for g in gens if not g.is_constant()]
    if not nonconst:
        raise PreconditionError("trivial subfield: all generators are constant")
    # low degree first keeps the intermediate gcds small
    nonconst.sort(key=lambda g: g.degree)
    return reduce(_join, nonconst[1:], _canonical(nonconst[0]))


def join_degree(gens: Iterable[RatFunc]) -> int:
    """[K(X) : K(gens)] from the gcd degree alone, without choosing a coefficient."""
    nonconst = [g for g in gens if not g.is_constant()]
    if not nonconst:
        raise PreconditionError("trivial subfield: all generators are constant")
    return len(_minpoly_gcd_lists([_near_separated(g) for g in nonconst])) - 1


def is_member(lam: RatFunc, f: RatFunc) -> bool:
    """lam in K(f)?"""
    if f.is_constant():
        raise PreconditionError("is_member needs a nonconstant f")
    if lam.is_constant():
        return True
    if lam.degree % f.degree:
        return False
    a, b = _near_separated(f), _near_separated(lam)
    bound = _specialized_gcd_degree(a, b)
    if bound is not None and bound < f.degree:
        return False
    return len(_bivariate_gcd(a, b)) - 1 == f.degree


def decompose_through(lam: RatFunc, f: RatFunc) -> RatFunc | None:
    """R with lam = R(f), or None when lam is not in K(f)."""
    if f.is_constant():
        raise PreconditionError("decompose_through needs a nonconstant f")
    if lam.is_constant():
        return lam
    if lam.degree % f.degree:
        return None
    m = lam.degree // f.degree
    P, Q = f.num, f.den
    ppow, qpow = [Poly.const(1)], [Poly.const(1)]
    for _ in range(m):
        ppow.append(ppow[-1] * P)
        qpow.append(qpow[-1] * Q)
    basis_polys = [ppow[i] * qpow[m - i] for i in range(m + 1)]
    # lam.num * sum b_i B_i - lam.den * sum a_i B_i = 0, unknowns (a_0..a_m, b_0..b_m)
    cols = [-(lam.den * B) for B in basis_polys] + [lam.num * B for B in basis_polys]
    n = max(len(c) for c in cols)
    rows = [[col[k] for col in cols] for k in range(n)]
    basis = nullspace(rows, 2 * (m + 1))
    if len(basis) != 1:
        return None
    vec = basis[0]
    top, bottom = Poly(vec[: m + 1]), Poly(vec[m + 1:])
    if not bottom:
        return None
    R = RatFunc(top, bottom)
    if R.degree != m or rf_compose(R, f) != lam:
        return None
    return R


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return [m for m in product(range(degree + 1), repeat=nvars) if sum(m) <= degree]


def _eval_monomial(m: tuple[int, ...], gens: Sequence[RatFunc]) -> RatFunc:
    out = RatFunc.const(1)
    for g, e in zip(gens, m):
        if e:
            out = out * g ** e
    return out


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b) // poly_gcd(a, b)


def _solve_expression(t: RatFunc, gens: list[RatFunc], monos: list[tuple[int, ...]]):
    """(N, D) supported on ``monos`` with t = N(gens)/D(gens), or None."""
    vals = [_eval_monomial(m, gens) for m in monos]
    # t*D(gens) - N(gens) = 0, unknowns (n_m..., d_m...)
    terms = [-v for v in vals] + [t * v for v in vals]
    common = reduce(_poly_lcm, (x.den for x in terms), Poly.const(1))
    polys = [x.num * (common // x.den) for x in terms]
    nrows = max(len(p) for p in polys)
    rows = [[p[k] for p in polys] for k in range(nrows)]
    basis = nullspace(rows, len(terms))
    candidates = basis + ([[sum(c) for c in zip(*basis)]] if len(basis) > 1 else [])
    k = len(monos)
    for vec in candidates:
        den = sum((vec[k + i] * vals[i] for i in range(k) if vec[k + i]), RatFunc())
        if not den:
            continue
        num = sum((vec[i] * vals[i] for i in range(k) if vec[i]), RatFunc())
        if num / den == t:
            N = {m: vec[i] for i, m in enumerate(monos) if vec[i]}
            D = {m: vec[k + i] for i, m in enumerate(monos) if vec[k + i]}
            return N, D
    return None


def express_in(t: RatFunc, gens: Sequence[RatFunc], max_degree: int = 3):
    """Find polynomials N, D with t = N(gens)/D(gens), t a generator of K(gens).

    Returns ``(N, D)`` as dicts from exponent tuples to coefficients, or None.
    When two of the gens, say g1 = R1(t) and g2 = R2(t), already generate
    K(t), the degree-one subresultant of R1(Z) - g1 and R2(Z) - g2 gives
    t = -s0/s1 with deg_g1 <= deg R2 - 1 and deg_g2 <= deg R1 - 1, so a
    solution supported on that box always exists.  Otherwise monomials of
    total degree up to ``max_degree`` in all gens are tried.
    """
    gens = list(gens)
    degs = [g.degree // t.degree for g in gens]
    for a in range(len(gens)):
        if degs[a] == 1:
            mono = [tuple(int(i == a and e) for i in range(len(gens))) for e in (0, 1)]
            return _solve_expression(t, gens, mono)
    pairs = sorted(((degs[a] * degs[b], a, b) for a in range(len(gens)) for b in range(a + 1, len(gens))))
    for _, a, b in pairs:
        if join_degree([gens[a], gens[b]]) != t.degree:
            continue
        box = []
        for ea in range(degs[b]):
            for eb in range(degs[a]):
                m = [0] * len(gens)
                m[a], m[b] = ea, eb
                box.append(tuple(m))
        found = _solve_expression(t, gens, box)
        if found is not None:
            return found
    for e in range(1, max_degree + 1 if len(gens) <= 4 else 1):
        found = _solve_expression(t, gens, _monomials(len(gens), e))
        if found is not None:
            return found
    return None


def eval_expression(expr, gens: Sequence[RatFunc]) -> RatFunc:
    """Evaluate an ``(N, D)`` pair from ``express_in`` at ``gens``."""
    N, D = expr
    num = sum((c * _eval_monomial(m, gens) for m, c in N.items()), RatFunc())
    den = sum((c * _eval_monomial(m, gens) for m, c in D.items()), RatFunc())
    return num / den
