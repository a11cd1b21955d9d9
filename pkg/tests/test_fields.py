from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cambrian.fields import (
    NumberField,
    RationalField,
    mat_vec,
    minimal_polynomial_2cos,
    solve_linear,
)


def test_minimal_polynomial_small_orders():
    # 2cos(pi/3) = 1, 2cos(pi/4) = sqrt(2), 2cos(pi/5) = golden ratio.
    assert minimal_polynomial_2cos(3) == (Fraction(-1), Fraction(1))
    assert minimal_polynomial_2cos(4) == (Fraction(-2), Fraction(0), Fraction(1))
    assert minimal_polynomial_2cos(5) == (
        Fraction(-1),
        Fraction(-1),
        Fraction(1),
    )


def test_field_degree_two_arithmetic():
    field = NumberField(5)  # Q(sqrt 5), generator x with x^2 = x + 1
    x = (Fraction(0), Fraction(1))
    x2 = field.mul(x, x)
    assert x2 == field.add(x, field.from_rational(1))
    assert field.mul(x, field.inv(x)) == field.from_rational(1)
    assert field.sign(field.sub(x, field.from_rational(1))) > 0
    assert field.sign(field.sub(x, field.from_rational(2))) < 0
    assert field.is_zero(field.sub(x, x))


def test_field_division_by_zero_rejected():
    field = NumberField(5)
    with pytest.raises(ZeroDivisionError):
        field.inv(field.from_rational(0))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@given(rationals, rationals, rationals)
def test_rational_field_ring_laws(a, b, c):
    field = RationalField()
    assert field.mul(a, field.add(b, c)) == field.add(
        field.mul(a, b), field.mul(a, c)
    )
    assert field.sub(a, a) == field.from_rational(0)
    if not field.is_zero(b):
        assert field.mul(field.div(a, b), b) == a


@given(rationals, rationals)
def test_number_field_mul_commutes(a, b):
    field = NumberField(5)
    u = (a, b)
    v = (b, a)
    assert field.mul(u, v) == field.mul(v, u)


def test_solve_linear_square_and_overdetermined():
    field = RationalField()
    rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    sol = solve_linear(field, rows, [Fraction(3), Fraction(1)])
    assert sol == (Fraction(2), Fraction(1))
    # Consistent overdetermined system.
    rows3 = rows + [[Fraction(2), Fraction(0)]]
    assert solve_linear(field, rows3, [Fraction(3), Fraction(1), Fraction(4)]) == (
        Fraction(2),
        Fraction(1),
    )
    # Inconsistent system.
    assert (
        solve_linear(field, rows3, [Fraction(3), Fraction(1), Fraction(5)])
        is None
    )
    # Singular square system.
    rows_sing = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert solve_linear(field, rows_sing, [Fraction(1), Fraction(3)]) is None


def test_mat_vec_rational():
    field = RationalField()
    m = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    assert mat_vec(field, m, [Fraction(3), Fraction(4)]) == (
        Fraction(11),
        Fraction(4),
    )
