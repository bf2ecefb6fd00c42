import pytest
from hypothesis import given, settings, strategies as st

from twistloop.checks import d_element_records, enveloping_suite
from twistloop.combinatorics import Monoid
from twistloop.enveloping import (
    WordOutOfDomain,
    WrongMonoid,
    D_op,
    Dtilde_op,
    ai2_element,
    aux_algebra,
    d_elem,
    dtilde_word,
    equiv_pos,
    ev_hom,
    loop_algebra,
    normal_order,
    reduce_mod_pos,
    target_algebra,
)
from twistloop.lie import SL2, get_case

Z = aux_algebra(Monoid.INT)
N2 = aux_algebra(Monoid.NAT2)

gens = st.tuples(st.sampled_from("efh"), st.integers(-2, 2), st.integers(0, 2))


def _gen(alg, spec):
    kind, a, n = spec
    return getattr(alg, kind)(a, n)


def _poly(alg, word):
    out = alg.one()
    for g in word:
        out = out * _gen(alg, g)
    return out


words = st.lists(gens, max_size=3)


def test_sl2_relation():
    e, f, h = Z.e(0, 0), Z.f(0, 0), Z.h(0, 0)
    assert (e * f).normal_order() == f * e + h
    assert (f * e).normal_order() == f * e
    assert (f * e).is_normal()


def test_aux_relation_example():
    a = 2
    assert (Z.e(a, 0) * Z.f(0, 1)).normal_order() == Z.f(0, 1) * Z.e(a, 0) + Z.h(a, 1)


def test_reduce_mod_pos_examples():
    a = 1
    assert not reduce_mod_pos(Z.e(a, 0))
    p = Z.f(0, 1) * Z.h(a, 1)
    assert reduce_mod_pos(p) == p
    assert reduce_mod_pos(Z.e(a, 0) * Z.f(0, 1)) == Z.h(a, 1)
    assert equiv_pos(Z.e(a, 0) * Z.f(0, 1), Z.h(a, 1))


@given(words, words, words)
@settings(max_examples=40)
def test_product_is_associative(u, v, w):
    p, q, r = _poly(Z, u), _poly(Z, v), _poly(Z, w)
    assert ((p * q) * r).normal_order() == (p * (q * r)).normal_order()


@given(words)
def test_normal_order_idempotent(u):
    p = _poly(Z, u).normal_order()
    assert p.is_normal()
    assert normal_order(p) == p


def test_d_operator_examples():
    a, b = 1, 2
    assert not D_op(Z, a, Z.e(b, 0))
    assert Dtilde_op(Z, a, Z.one()) == Z.h(a, 1)
    assert Dtilde_op(Z, b, Z.h(a, 1)) == (Z.h(a, 1) * Z.h(b, 1) - Z.h(a + b, 2)).normal_order()


def test_dtilde_word_examples():
    a, b = 1, -2
    assert dtilde_word(()) == Z.one()
    assert dtilde_word((a,)) == Z.h(a, 1)
    assert dtilde_word((a, b)) == (Z.h(a, 1) * Z.h(b, 1) - Z.h(a + b, 2)).normal_order()


@given(st.lists(st.integers(-2, 2), max_size=3))
@settings(max_examples=30)
def test_dtilde_word_methods_agree_and_symmetric(word):
    w = tuple(word)
    op = dtilde_word(w, method="operator")
    assert op == dtilde_word(w, method="recursion")
    assert op == dtilde_word(tuple(reversed(w)))
    assert op.is_cartan()


def test_wrong_monoid_letter():
    with pytest.raises(WrongMonoid):
        Dtilde_op(aux_algebra(Monoid.NAT), -1, aux_algebra(Monoid.NAT).one())


def test_ev_hom_examples():
    cur = target_algebra("DeltaA1")
    for a in (-1, 0, 3):
        assert ev_hom("DeltaA1", Z.h(a, 1)) == cur.w(a)
    ai1, loop = get_case("AI1"), loop_algebra(SL2)
    for (a, b), n in [((1, 0), 0), ((0, 1), 1), ((2, 1), 2)]:
        assert ev_hom("AI1", N2.e((a, b), n)) == loop.element(ai1.element("x", (a, b + n)))
    assert ev_hom("DeltaA1", dtilde_word((1, 2))) == (cur.w(1) * cur.w(2) - cur.w(3)).normal_order()


def test_ev_hom_rejects_other_monoid():
    with pytest.raises(WrongMonoid):
        ev_hom("A1", Z.h(0, 1))


def test_d_elem_examples():
    assert d_elem("DeltaA1", (2,)) == target_algebra("DeltaA1").w(2)
    ai1, loop = get_case("AI1"), loop_algebra(SL2)
    assert d_elem("AI1", ((2, 1),)) == loop.element(ai1.element("w", (2, 2)))
    assert d_elem("AI2", ((1, 1),)) == ai2_element("w-", (1, 1)) * -1
    assert d_elem("AI2", ((1, 2),)) == ai2_element("w+", (1, 2))
    with pytest.raises(WordOutOfDomain):
        d_elem("A1", (-1,))


def test_enveloping_suite_small_bound():
    records = enveloping_suite(rmax=2, letter_bound=1, samples=3, d_elements=False)
    assert records and all(r.passed for r in records), [r for r in records if not r.passed]


def test_d_elements_small_bound():
    records = d_element_records(rmax=2, letter_bound=1, ai2_rmax=1)
    assert records and all(r.passed for r in records), [r for r in records if not r.passed]
