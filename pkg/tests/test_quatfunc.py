import random

import pytest
from hypothesis import given, settings, strategies as st

from skewluroth.quatfunc import (QuatFunc, components, components_by_averaging, in_H_of_f, is_tau_fixed_profile,
                                 phi, phi_inv, sigma_ext, tau_ext)
from skewluroth.ratfunc import RatFunc, rf_compose
from skewluroth.sampling import (rand_parity_violating, rand_ratfunc, rand_skewfrac, rand_skewpoly,
                                 rand_tau_fixed)
from skewluroth.scalars import GaussRat
from skewluroth.skewfield import GAUSS, SkewFrac, SkewPoly

X = RatFunc.x()
ONE, QI, QJ, QK = QuatFunc(1), QuatFunc(0, 1), QuatFunc(0, 0, 1), QuatFunc(0, 0, 0, 1)
I = GaussRat(0, 1)
seeds = st.integers(0, 2 ** 32 - 1)


def T_poly(*coeffs):
    return SkewFrac(SkewPoly(GAUSS, coeffs))


def test_field_examples():
    jX = QJ * X
    assert jX * jX == QuatFunc(-X * X)
    assert QJ.inv() == -QJ
    assert (QI + jX) * (QI - jX) == QuatFunc(X * X - 1, 0, 0, -2 * X)
    with pytest.raises(ZeroDivisionError):
        QuatFunc(0).inv()


def test_phi_examples():
    assert phi(T_poly(0, 1)) == QJ * X
    assert phi(T_poly(0, 1, 0, I)) == QJ * X - QK * X ** 3
    assert phi(T_poly(1)) == ONE


def test_phi_inv_examples():
    assert phi_inv(QJ * X) == T_poly(0, 1)
    assert phi_inv(QJ) is None
    assert phi_inv(QuatFunc(X)) is None


def test_sigma_tau_examples():
    v = QJ * X - QK * X ** 3
    assert sigma_ext(v) == QJ * X + QK * X ** 3
    assert tau_ext(QJ * X) == QJ * X
    assert tau_ext(QuatFunc(X)) == QuatFunc(-X)


def test_components_examples():
    assert components(QJ * X - QK * X ** 3) == (0, 0, X, -X ** 3)
    assert components(QuatFunc(1, 2)) == (1, 2, 0, 0)
    assert components((QI + QJ) * X ** 2) == (0, X ** 2, X ** 2, 0)


def test_membership_examples():
    assert in_H_of_f(QJ * X - QK * X ** 3, X)
    assert not in_H_of_f(QJ * X, X ** 2)
    assert in_H_of_f(QuatFunc(X ** 4, 1), X ** 2)


def test_rendering():
    assert str(QJ * X - QK * X ** 3) == "j*X-k*X^3"
    assert str(QuatFunc(0)) == "0"


@given(seeds)
def test_phi_homomorphism(seed):
    rng = random.Random(seed)
    p, q = (rand_skewpoly(rng, 4, 5) for _ in range(2))
    assert phi(p * q) == phi(p) * phi(q)
    assert phi(p + q) == phi(p) + phi(q)


@settings(max_examples=50)
@given(seeds)
def test_phi_homomorphism_fractions(seed):
    rng = random.Random(seed)
    x, y = rand_skewfrac(rng, 2, 3), rand_skewfrac(rng, 2, 3)
    assert phi(x * y) == phi(x) * phi(y)
    if y:
        assert phi(y.inv()) == phi(y).inv()


@settings(max_examples=50)
@given(seeds)
def test_j_commutation(seed):
    u = phi(rand_skewfrac(random.Random(seed)))
    assert QJ * u == sigma_ext(u) * QJ


@settings(max_examples=50)
@given(seeds)
def test_image_is_tau_fixed_and_round_trips(seed):
    x = rand_skewfrac(random.Random(seed))
    u = phi(x)
    assert tau_ext(u) == u and is_tau_fixed_profile(u)
    assert phi_inv(u) == x


@settings(max_examples=50)
@given(seeds)
def test_fixed_ring_characterization(seed):
    rng = random.Random(seed)
    u = rand_tau_fixed(rng)
    assert tau_ext(u) == u
    x = phi_inv(u)
    assert x is not None and phi(x) == u
    w = rand_parity_violating(rng)
    assert tau_ext(w) != w and phi_inv(w) is None


@settings(max_examples=50)
@given(seeds)
def test_sigma_tau_are_involutive_automorphisms(seed):
    rng = random.Random(seed)
    u, w = QuatFunc(*(rand_ratfunc(rng, 2, 3) for _ in range(4))), rand_tau_fixed(rng)
    for auto in (sigma_ext, tau_ext):
        assert auto(auto(u)) == u
        assert auto(u * w) == auto(u) * auto(w)


@settings(max_examples=50)
@given(seeds)
def test_centralizer_of_quaternion_units(seed):
    rng = random.Random(seed)
    u = QuatFunc(*(rand_ratfunc(rng, 2, 3) for _ in range(4)))
    central = all(not c for c in u.components()[1:])
    commutes = u * QI == QI * u and u * QJ == QJ * u
    assert commutes == central


@settings(max_examples=30)
@given(seeds)
def test_center_of_H_of_f(seed):
    rng = random.Random(seed)
    f = rand_ratfunc(rng, 2, 3)
    if f.is_constant():
        return
    r = rand_ratfunc(rng, 2, 3)
    z = QuatFunc(rf_compose(r, f))
    assert z * QI == QI * z and z * QJ == QJ * z
    assert (QI * f) * QJ != QJ * (QI * f)


@settings(max_examples=50)
@given(seeds)
def test_components_match_averaging(seed):
    rng = random.Random(seed)
    u = QuatFunc(*(rand_ratfunc(rng, 2, 3) for _ in range(4)))
    assert components_by_averaging(u) == components(u)
