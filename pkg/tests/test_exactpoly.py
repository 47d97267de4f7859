from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boxritz.exactpoly import Polynomial, basis_function, derivative, integrate_unit, multiply


def P(*coeffs):
    return Polynomial.from_coefficients(coeffs)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
polys = st.lists(small_fractions, max_size=6).map(lambda cs: Polynomial.from_coefficients(cs))


def test_basis_function_expansion():
    assert basis_function(1) == P(0, 1, -1)
    assert basis_function(2) == P(0, 0, 1, -1)
    assert basis_function(3)(Fraction(1, 2)) == Fraction(1, 16)
    assert basis_function(7).degree == 8


@pytest.mark.parametrize("i", [0, -1])
def test_basis_function_rejects_nonpositive(i):
    with pytest.raises(ValueError):
        basis_function(i)


@pytest.mark.parametrize("i", range(1, 25))
def test_basis_vanishes_at_ends(i):
    u = basis_function(i)
    assert u(0) == 0
    assert u(1) == 0


def test_derivative():
    assert derivative(P(0, 1, -1)) == P(1, -2)
    assert derivative(P(5)).is_zero()
    assert derivative(P(0, 0, 1)) == P(0, 2)


def test_multiply():
    u1 = basis_function(1)
    assert multiply(u1, u1) == P(0, 0, 1, -2, 1)
    assert multiply(u1, Polynomial()).is_zero()
    assert multiply(P(0, 1), P(1, -1)) == P(0, 1, -1)


def test_integrate_unit():
    assert integrate_unit(P(0, 0, 1)) == Fraction(1, 3)
    u1 = basis_function(1)
    assert integrate_unit(multiply(u1, u1)) == Fraction(1, 30)
    du = derivative(u1)
    assert integrate_unit(multiply(du, du)) == Fraction(1, 3)


def test_trailing_zeros_trimmed():
    p = P(1, 2, 0, 0)
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert Polynomial().degree == -1


@given(polys, polys)
def test_integral_is_additive(p, q):
    assert integrate_unit(p + q) == integrate_unit(p) + integrate_unit(q)


@given(polys, polys, polys)
def test_multiply_commutative_associative(p, q, r):
    assert multiply(p, q) == multiply(q, p)
    assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))


@given(polys)
def test_inner_product_positive(p):
    if p.is_zero():
        assert integrate_unit(multiply(p, p)) == 0
    else:
        assert integrate_unit(multiply(p, p)) > 0


@given(polys, st.fractions(min_value=-2, max_value=2, max_denominator=7))
def test_product_evaluates_pointwise(p, x):
    q = basis_function(2)
    assert multiply(p, q)(x) == p(x) * q(x)
