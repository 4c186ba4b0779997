from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from skewluroth.scalars import (GaussRat, I, QI, QJ, QK, QuadRat, Quaternion, quat_inv, quat_mul,
                                quat_sigma, quat_tau, rat_sqrt, squarefree_decompose)

small = st.integers(-20, 20)
quats = st.builds(Quaternion, small, small, small, small)
nonzero_quats = quats.filter(bool)


def _sympy(q):
    return sympy.Quaternion(*q.components())


def test_quat_mul_examples():
    assert quat_mul(QI, QJ) == QK
    q = Quaternion(1, 2, 3, 4)
    assert quat_mul(Quaternion(1), q) == q
    assert quat_mul(QJ, QI) == -QK


def test_unit_relations():
    assert QI * QI == QJ * QJ == QK * QK == QI * QJ * QK == -1


def test_quat_inv_examples():
    assert quat_inv(QI) == -QI
    q = Quaternion(1, 1, 1, 1)
    inv = quat_inv(q)
    assert inv == Quaternion(Fraction(1, 4), Fraction(-1, 4), Fraction(-1, 4), Fraction(-1, 4))
    assert q * inv == 1 == inv * q
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        quat_inv(Quaternion(0))


def test_sigma_tau_examples():
    assert quat_sigma(QI) == -QI
    assert quat_sigma(QJ) == QJ
    assert quat_tau(QJ) == -QJ
    assert quat_tau(QI) == QI
    q = Quaternion(1, 2, 3, 4)
    assert quat_sigma(quat_sigma(q)) == q
    assert quat_tau(quat_tau(q)) == q


@given(quats, quats)
def test_product_matches_sympy(p, q):
    assert _sympy(p * q) == _sympy(p) * _sympy(q)


@given(quats, quats, quats)
def test_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (q + r) * p == q * p + r * p


@given(quats, quats)
def test_norm_multiplicative(p, q):
    assert (p * q).norm() == p.norm() * q.norm()


@given(quats, quats)
def test_sigma_tau_are_homomorphisms(p, q):
    for f in (quat_sigma, quat_tau):
        assert f(p * q) == f(p) * f(q)
        assert f(p + q) == f(p) + f(q)


@given(nonzero_quats, nonzero_quats)
def test_no_zero_divisors(p, q):
    assert (p * q).norm() != 0
    assert p * p.inv() == 1


def test_gaussian_rationals():
    z = GaussRat(1, 2)
    assert z * z.conj() == 5
    assert z * z.inv() == 1
    assert I * I == -1
    with pytest.raises(ZeroDivisionError):
        GaussRat(0, 0).inv()


def test_gaussian_components_rejected_in_quaternions():
    with pytest.raises(TypeError):
        Quaternion(GaussRat(0, 1))


def test_quadratic_extension():
    r = QuadRat.sqrt(Fraction(2))
    assert isinstance(r, QuadRat) and r * r == 2
    assert QuadRat.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    s = QuadRat(1, 1, 3)
    assert s * s.inv() == 1
    with pytest.raises(ValueError):
        QuadRat(1, 1, 2) + QuadRat(1, 1, 3)
    with pytest.raises(ValueError):
        QuadRat(1, 1, 4)
    with pytest.raises(TypeError):
        QuadRat(QuadRat(0, 1, 2), 0, 3)


def test_rational_square_roots():
    assert rat_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert rat_sqrt(Fraction(2)) is None
    assert rat_sqrt(Fraction(-1)) is None
    assert squarefree_decompose(12) == (2, 3)
