from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistloop.laurent import LaurentPoly, ZeroPoint, from_plus_basis, plus_reduction, to_plus_basis

coeff = st.integers(-5, 5).map(Fraction)
polys = st.dictionaries(st.integers(-4, 4), coeff, max_size=5).map(LaurentPoly)
points = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)])


@given(polys)
def test_involute_is_involution(p):
    assert p.involute().involute() == p


@given(polys, polys, points)
def test_evaluation_is_multiplicative(p, q, alpha):
    assert (p * q).eval(alpha) == p.eval(alpha) * q.eval(alpha)
    assert (p + q).eval(alpha) == p.eval(alpha) + q.eval(alpha)


@given(polys)
def test_plus_basis_round_trip(p):
    assert from_plus_basis(to_plus_basis(p)) == p


@given(polys)
def test_split_parts(p):
    sym, anti = p.split_plus_minus()
    assert sym + anti == p
    assert sym.involute() == sym and anti.involute() == anti * -1


def test_t_plus_minus():
    tp, tm = LaurentPoly.t_plus(), LaurentPoly.t_minus()
    assert tp == LaurentPoly({1: 1, -1: 1})
    assert tm == LaurentPoly({1: 1, -1: -1})
    # t_+^2 = t_-^2 + 4
    assert tp**2 == tm**2 + LaurentPoly.constant(4)
    assert LaurentPoly.plus_minus_power(2, 1) == tp**2 * tm


def test_eval_at_zero_rejected():
    with pytest.raises(ZeroPoint):
        LaurentPoly.t_plus().eval(0)


def test_plus_reduction_matches_expansion():
    a, b, c = 1, 1, 2
    tp, tm = LaurentPoly.t_plus(), LaurentPoly.t_minus()
    lhs = tp ** (a + 2 * c) * tm**b
    rhs = LaurentPoly()
    for k, a2, b2 in plus_reduction(a, b, c):
        rhs = rhs + tp**a2 * tm**b2 * k
    assert lhs == rhs
