from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistloop.field import (
    FieldError,
    Scalar,
    field_d,
    format_scalar,
    is_half_integer_nonneg,
    is_integer,
    parse_scalar,
    sqrt_in_field,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
scalars = st.builds(lambda a, b: Scalar(a, b), rationals, rationals)
nonzero = scalars.filter(bool)


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x


@given(nonzero)
def test_inverse(x):
    assert x * x.inverse() == 1
    assert x / x == Scalar(1)


@given(scalars)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(scalars)
def test_sqrt_of_square(x):
    r = sqrt_in_field(x * x)
    assert r is not None and r * r == x * x


def test_text_forms():
    assert format_scalar(Fraction(3)) == "3/1"
    assert format_scalar(Scalar(1, -Fraction(1, 2))) == "1/1-1/2*sqrt(2)"
    assert parse_scalar("1+sqrt(2)") == Scalar(1, 1)
    assert parse_scalar("-3/4") == Scalar(Fraction(-3, 4))
    with pytest.raises(ValueError):
        parse_scalar("1.5.2")


def test_sqrt_in_field_cases():
    assert sqrt_in_field(2) == Scalar(0, 1)
    assert sqrt_in_field(Fraction(9, 4)) == Scalar(Fraction(3, 2))
    assert sqrt_in_field(3) is None
    # (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    r = sqrt_in_field(Scalar(3, 2))
    assert r * r == Scalar(3, 2)


def test_other_discriminant():
    with field_d(5):
        assert sqrt_in_field(5) == Scalar(0, 1, 5)
        assert sqrt_in_field(2) is None


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        Scalar(0, 1, 2) + Scalar(0, 1, 3)


def test_integrality_predicates():
    assert is_integer(Scalar(4)) and not is_integer(Scalar(Fraction(1, 2)))
    assert is_half_integer_nonneg(Fraction(3, 2)) and not is_half_integer_nonneg(Fraction(-1, 2))
    assert not is_half_integer_nonneg(Fraction(1, 3))


def test_order_in_real_embedding():
    assert Scalar(0, 1) > Scalar(Fraction(7, 5))
    assert Scalar(0, 1) < Scalar(Fraction(3, 2))
