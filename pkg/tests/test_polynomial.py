from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from steinchisq.polynomial import X, Polynomial

from conftest import polynomials, rationals


def test_trailing_zeros_stripped():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial().degree == -1


def test_arithmetic():
    p = Polynomial([1, 2])          # 1 + 2x
    q = Polynomial([0, 0, 1])       # x^2
    assert p + q == Polynomial([1, 2, 1])
    assert p * q == Polynomial([0, 0, 1, 2])
    assert (X - 3) * (X + 3) == Polynomial([-9, 0, 1])
    assert 2 * p - p == p


def test_horner():
    assert Polynomial([1, 2])(3) == 7
    assert Polynomial([Fraction(1, 2), 0, 1])(Fraction(1, 3)) == Fraction(11, 18)


def test_derivative():
    p = Polynomial([5, 0, 3, 1])
    assert p.derivative() == Polynomial([0, 6, 3])
    assert p.derivative(3) == Polynomial([6])
    assert p.derivative(4).is_zero()


@given(polynomials(), rationals, rationals)
def test_shift_matches_evaluation(coeffs, c, x):
    p = Polynomial(coeffs)
    assert p.shift(c)(x) == p(x + c)


@given(polynomials(), polynomials(), rationals)
def test_product_evaluates_pointwise(a, b, x):
    assert (Polynomial(a) * Polynomial(b))(x) == Polynomial(a)(x) * Polynomial(b)(x)
