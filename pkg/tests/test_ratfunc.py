from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from skewluroth.errors import PreconditionError
from skewluroth.ratfunc import (Mobius, Poly, RatFunc, even_odd_split, mobius_apply, mobius_solve,
                                poly_divmod, poly_gcd, poly_xgcd, rf_compose, rf_degree, rf_normalize)

X = RatFunc.x()
x_sym = sympy.Symbol("x")

coeff = st.integers(-6, 6).map(Fraction)
polys = st.lists(coeff, max_size=5).map(Poly)
nonzero_polys = polys.filter(bool)
ratfuncs = st.builds(RatFunc, polys, nonzero_polys)
nonconstant = ratfuncs.filter(lambda f: not f.is_constant())
mobius = st.tuples(coeff, coeff, coeff, coeff).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)


def to_sympy(f: RatFunc):
    num = sum(sympy.Rational(c.numerator, c.denominator) * x_sym ** n for n, c in enumerate(f.num.coeffs))
    den = sum(sympy.Rational(c.numerator, c.denominator) * x_sym ** n for n, c in enumerate(f.den.coeffs))
    return num / den


def test_normalize_examples():
    assert rf_normalize(X.num ** 2 - 1, X.num - 1) == X + 1
    assert rf_normalize(Poly([0, 2]), Poly([2])) == X
    zero = rf_normalize(Poly(), Poly([0, 0, 0, 1]))
    assert zero.num == Poly() and zero.den == Poly([1])
    with pytest.raises(ZeroDivisionError):
        rf_normalize(Poly([1]), Poly())


def test_degree_examples():
    assert rf_degree((X ** 3 + 1) / X) == 3
    assert rf_degree(X ** 2 + X ** 6) == 6
    assert rf_degree(RatFunc.const(5)) == 0


def test_degree_six_by_minimal_polynomial():
    # Z^6 + Z^2 - (X^6 + X^2) is irreducible over Q(X^2 + X^6), so [Q(X) : Q(f)] = 6
    z, t = sympy.symbols("z t")
    minpoly = sympy.factor_list(z ** 6 + z ** 2 - t, z)[1]
    assert [sympy.degree(p, z) for p, _ in minpoly] == [6]


def test_compose_examples():
    assert rf_compose(X ** 2, X + 1) == X ** 2 + 2 * X + 1
    f = (X ** 3 + 2) / (X - 5)
    assert rf_compose(X, f) == f
    assert rf_compose((X + 1) / X, X ** 2) == (X ** 2 + 1) / X ** 2


def test_even_odd_split_examples():
    assert even_odd_split(X ** 3) == (RatFunc(), X)
    assert even_odd_split(X ** 2) == (X, RatFunc())
    g, h = even_odd_split((1 + X) / (1 - X))
    assert g == (1 + X) / (1 - X)
    assert h == 2 / (1 - X)


def test_mobius_apply_examples():
    assert mobius_apply(Mobius(0, 1, 1, 0), X) == 1 / X
    f = (X ** 2 + 3) / (X - 1)
    assert mobius_apply(Mobius.identity(), f) == f
    assert mobius_apply(Mobius(1, 1, 0, 1), X ** 2) == X ** 2 + 1


def test_mobius_solve_examples():
    f = (1 + X) / (1 - X)
    assert mobius_solve(f, (1 - X) / (1 + X)) == Mobius(0, 1, 1, 0)
    g = (X ** 3 - X + 2) / (X ** 2 + 1)
    assert mobius_solve(g, g).is_identity()
    assert mobius_solve(X ** 3, X ** 2) is None
    with pytest.raises(PreconditionError):
        Mobius(1, 2, 2, 4)


@given(ratfuncs, ratfuncs)
def test_arithmetic_matches_sympy(f, g):
    assert sympy.cancel(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.cancel(to_sympy(f + g) - to_sympy(f) - to_sympy(g)) == 0


@given(ratfuncs)
def test_canonical_invariants(f):
    assert f.den.lc == 1
    assert len(poly_gcd(f.num, f.den)) == 1 or not f.num
    if not f.num:
        assert f.den == Poly([1])


@given(nonzero_polys, nonzero_polys)
def test_gcd_and_bezout(a, b):
    g, u, v = poly_xgcd(a, b)
    assert u * a + v * b == g
    assert not poly_divmod(a, g)[1] and not poly_divmod(b, g)[1]
    assert g == poly_gcd(a, b)
    expected = sympy.Poly(sympy.gcd(sympy.Poly(list(reversed(a.coeffs)), x_sym),
                                    sympy.Poly(list(reversed(b.coeffs)), x_sym)), x_sym).monic()
    assert [Fraction(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())] == list(g.coeffs)


@given(ratfuncs, ratfuncs)
def test_even_odd_round_trip(g, h):
    f = rf_compose(g, X * X) + rf_compose(h, X * X) * X
    assert even_odd_split(f) == (g, h)


@settings(max_examples=60)
@given(mobius, nonconstant)
def test_mobius_round_trip(m, f):
    M = Mobius(*m)
    F = mobius_apply(M, f)
    assert mobius_solve(f, F) == M
    assert rf_degree(F) == rf_degree(f)


@given(nonconstant, nonconstant)
def test_compose_degree_multiplies(R, f):
    assert rf_degree(rf_compose(R, f)) == rf_degree(R) * rf_degree(f)


def test_parse_friendly_rendering():
    assert str((X ** 2 - 1) / (X + 2)) == "(X^2-1)/(X+2)"
    assert str(-X / (X ** 2 + 1)) == "-X/(X^2+1)"
