from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from twistloop.checks import invring_suite
from twistloop.combinatorics import Monoid
from twistloop.field import Scalar
from twistloop.invring import (
    AmbientMismatch,
    InvPoly,
    RelationViolated,
    eval_inv,
    eval_m,
    m_expand_dense,
    mul_inv,
    solve_points,
)


def test_basic_examples():
    assert m_expand_dense((), 3) == InvPoly.one(3).to_dense()
    assert eval_inv(InvPoly.m((0,), 4), [1, 2, 3, 4]) == 4
    assert eval_inv(InvPoly.m((1,), 2, Monoid.INT), [2, 3]) == 5
    assert eval_inv(InvPoly.m((1, 1), 2, Monoid.INT), [2, 3]) == 12


def test_single_letter_dense_expansion():
    # m_(a) = x1^a + x2^a: compare values on a grid
    for a in range(4):
        for pts in ([2, 5], [Fraction(1, 3), 7]):
            assert m_expand_dense((a,), 2).evaluate(pts) == pts[0] ** a + pts[1] ** a


def test_product_examples():
    n = 3
    for a, b in [(2, 1), (3, 3)]:
        prod = mul_inv(InvPoly.m((a,), n), InvPoly.m((b,), n))
        assert prod == InvPoly.m((a, b), n) + InvPoly.m((a + b,), n)
    word = (2, 1)
    assert mul_inv(InvPoly.m((0,), n), InvPoly.m(word, n)) == InvPoly.m(word, n) * n
    assert mul_inv(InvPoly.one(n), InvPoly.m(word, n)) == InvPoly.m(word, n)


def test_solve_points_examples():
    c = {(1,): 5, (2,): 13, (1, 1): 12}
    assert sorted(solve_points(c, 2)) == [2, 3]
    assert solve_points({(a,): 3**a for a in range(1, 4)}, 1) == [3]
    with pytest.raises(RelationViolated):
        solve_points({(1,): 5, (2,): 13, (1, 1): 11}, 2)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        eval_inv(InvPoly.m((1,), 2), [1, 2, 3])


nat_words = st.lists(st.integers(0, 3), max_size=3).map(tuple)
int_words = st.lists(st.integers(-2, 2), max_size=3).map(tuple)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda q: q != 0)


@given(nat_words, nat_words, st.lists(rationals, min_size=3, max_size=3))
@settings(max_examples=40)
def test_straightened_product_evaluates_like_pointwise_product(u, v, pts):
    n = 3
    p, q = InvPoly.m(u, n), InvPoly.m(v, n)
    assert eval_inv(mul_inv(p, q), pts) == eval_inv(p, pts) * eval_inv(q, pts)


@given(int_words, st.lists(rationals, min_size=3, max_size=3))
@settings(max_examples=40)
def test_permutation_invariance_and_brute_force(word, pts):
    # oracle: sum over injective index maps, independent of the dense expansion
    value = eval_inv(InvPoly.m(word, 3, Monoid.INT), pts)
    assert value == eval_m(word, pts, Monoid.INT)
    for perm in permutations(word):
        assert eval_m(perm, pts, Monoid.INT) == value


@given(st.lists(st.integers(-3, 4).filter(bool).map(Fraction), min_size=1, max_size=3))
@settings(max_examples=30)
def test_solve_points_round_trip(pts):
    n = len(pts)
    c = {(k,): eval_m((k,), pts, Monoid.NAT) for k in range(1, n + 1)}
    c[(1, 1)] = eval_m((1, 1), pts, Monoid.NAT)
    assert sorted(solve_points(c, n)) == sorted(Scalar.lift(p) for p in pts)


def test_invring_suite_small_bound():
    records = invring_suite(n=2, letter_bound=2, max_len=2, samples=2)
    assert records and all(r.passed for r in records), [r for r in records if not r.passed]
