"""Unit tests for the exact degree-one scalar ring."""

from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superroots import AmbiguousSign, DivisionByZero, NonLinearQuotient
from superroots import LAMBDA, ONE, ZERO, Scalar, scalar_div

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(Scalar, rationals, rationals)


def test_constants():
    assert ZERO == Scalar(Q(0), Q(0))
    assert ONE == Scalar(Q(1), Q(0))
    assert LAMBDA == Scalar(Q(0), Q(1))


def test_basic_arithmetic():
    x = Scalar(Q(2), Q(3))
    y = Scalar(Q(-1), Q(1, 2))
    assert x + y == Scalar(Q(1), Q(7, 2))
    assert x - y == Scalar(Q(3), Q(5, 2))
    assert -x == Scalar(Q(-2), Q(-3))
    assert x + 1 == Scalar(Q(3), Q(3))
    assert 1 + x == Scalar(Q(3), Q(3))
    assert 2 - x == Scalar(Q(0), Q(-3))


def test_multiplication_by_rationals():
    x = Scalar(Q(2), Q(3))
    assert x * 2 == Scalar(Q(4), Q(6))
    assert 2 * x == Scalar(Q(4), Q(6))
    assert x * Q(1, 3) == Scalar(Q(2, 3), Q(1))
    assert x * ZERO == ZERO


def test_lambda_squared_is_rejected():
    with pytest.raises(NonLinearQuotient):
        LAMBDA * LAMBDA
    with pytest.raises(NonLinearQuotient):
        Scalar(Q(1), Q(1)) * Scalar(Q(2), Q(-1))


def test_zero_test_rational():
    assert ZERO.is_zero()
    assert not ONE.is_zero()
    assert not Scalar(Q(1, 7)).is_zero()


def test_zero_test_at_excluded_values_is_decidable():
    # const + lam*x vanishes only at an excluded value of the parameter:
    # x = 0 for pure-lambda scalars, x = -1 for const == lam.
    assert not LAMBDA.is_zero()
    assert not Scalar(Q(3), Q(3)).is_zero()
    assert not Scalar(Q(-1, 2), Q(-1, 2)).is_zero()


def test_zero_test_ambiguous():
    with pytest.raises(AmbiguousSign):
        Scalar(Q(1), Q(1, 2)).is_zero()  # vanishes at lambda = -2
    with pytest.raises(AmbiguousSign):
        Scalar(Q(-3), Q(1)).is_zero()  # vanishes at lambda = 3


def test_as_integer():
    assert Scalar(Q(5)).as_integer() == 5
    assert Scalar(Q(-2)).as_integer() == -2
    with pytest.raises(ValueError):
        Scalar(Q(1, 2)).as_integer()
    with pytest.raises(ValueError):
        LAMBDA.as_integer()


def test_evaluate_at_rational():
    x = Scalar(Q(2), Q(3))
    assert x.at(Q(1, 3)) == Q(3)
    assert x.at(2) == Q(8)
    with pytest.raises(ValueError):
        x.at(0)
    with pytest.raises(ValueError):
        x.at(-1)


def test_division_by_rational():
    x = Scalar(Q(2), Q(3))
    assert scalar_div(x, Scalar(Q(2))) == Scalar(Q(1), Q(3, 2))
    assert scalar_div(x, ONE) == x


def test_division_by_lambda_multiple():
    # (2 + 2λ) / (1 + λ) = 2 exactly.
    assert scalar_div(Scalar(Q(2), Q(2)), Scalar(Q(1), Q(1))) == Scalar(Q(2))
    assert scalar_div(LAMBDA, LAMBDA) == ONE
    assert scalar_div(Scalar(Q(0), Q(3)), LAMBDA) == Scalar(Q(3))


def test_division_errors():
    with pytest.raises(DivisionByZero):
        scalar_div(ONE, ZERO)
    with pytest.raises(NonLinearQuotient):
        scalar_div(ONE, LAMBDA)  # 1/λ leaves the ring
    with pytest.raises(NonLinearQuotient):
        scalar_div(Scalar(Q(1), Q(1)), Scalar(Q(0), Q(1)))


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(Scalar(Q(3, 2))) == "3/2"
    assert str(LAMBDA) == "λ"
    assert str(-LAMBDA) == "-λ"
    assert str(Scalar(Q(1), Q(1))) == "1+λ"
    assert str(Scalar(Q(1), Q(-2))) == "1-2·λ"


@given(scalars, scalars, rationals)
def test_ring_laws_match_evaluation(x, y, v):
    """Addition/subtraction commute with evaluation at any admissible point."""
    if v in (Q(0), Q(-1)):
        v = Q(1, 3)
    assert (x + y).at(v) == x.at(v) + y.at(v)
    assert (x - y).at(v) == x.at(v) - y.at(v)
    assert (-x).at(v) == -x.at(v)


@given(scalars, rationals, rationals)
def test_rational_multiplication_matches_evaluation(x, c, v):
    if v in (Q(0), Q(-1)):
        v = Q(1, 3)
    assert (x * c).at(v) == x.at(v) * c


@given(scalars, scalars)
def test_division_inverts_multiplication(x, y):
    """Whenever x*y stays in the ring and y != 0, (x*y)/y == x."""
    if y == ZERO:
        return
    try:
        prod = x * y
    except NonLinearQuotient:
        return
    assert scalar_div(prod, y) == x
