from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twistloop.classifier import (
    FINITE,
    INSUFFICIENT,
    NOT_FINITE,
    OK,
    CaseMismatch,
    berlekamp_massey,
    classify_case,
    classify_general,
    detect_recurrence,
    materialize_alpha,
    synthesize_general,
    synthesize_moments,
)
from twistloop.dynkin import UnknownDiagramRow, parse_diagram
from twistloop.field import Scalar
from twistloop.moments import MomentData


def test_detect_recurrence_examples():
    seq = [2**a + 3**a for a in range(10)]
    assert seq[:4] == [2, 5, 13, 35]
    dec = detect_recurrence(seq)
    assert dec.status == OK and sorted(dec.terms) == [(2, 1), (3, 1)]
    assert detect_recurrence([0] * 6).terms == []
    dec = detect_recurrence([1, 2, 4, 8])
    assert dec.status == OK and dec.terms == [(2, 1)]
    assert detect_recurrence([1, 2, 4]).status == INSUFFICIENT


@given(st.lists(st.tuples(st.sampled_from([2, 3, -5, Fraction(1, 7), Fraction(-3, 2)]), st.integers(1, 3)), max_size=3, unique_by=lambda t: t[0]))
def test_detect_recurrence_round_trip(terms):
    seq = [sum((c * Fraction(r) ** a for r, c in terms), Fraction(0)) for a in range(2 * len(terms) + 3)]
    dec = detect_recurrence(seq)
    assert dec.status == OK
    assert sorted(dec.terms) == sorted((Scalar.lift(r), Scalar.lift(c)) for r, c in terms)


def test_berlekamp_massey_recurrence():
    seq = [2**a + 3**a for a in range(8)]
    order, rec = berlekamp_massey(seq)
    assert order == 2
    for a in range(2, 8):
        assert seq[a] + rec[0] * seq[a - 1] + rec[1] * seq[a - 2] == 0


def test_a1_example():
    s = [Fraction(5, 2) ** a + Fraction(10, 3) ** a for a in range(7)]
    res = classify_case("A1", MomentData("A1", 6, {"w": s}))
    assert res.verdict == FINITE
    assert res.betas() == [Fraction(5, 2), Fraction(10, 3)]
    assert res.alphas() == [2, 3]


def test_ai1_example():
    s = [Fraction(1, 3) * 2**a + 2 * (-2) ** a + Fraction(10, 3) ** a for a in range(9)]
    res = classify_case("AI1", MomentData("AI1", 8, {"w": s}))
    assert res.verdict == FINITE
    assert res.nu == {1: Fraction(1, 3), -1: 2}
    assert res.alphas() == [3]


def test_non_integer_coefficient_rejected():
    s = [Fraction(1, 2) * 3**a for a in range(6)]
    res = classify_case("A1", MomentData("A1", 5, {"w": s}))
    assert res.verdict == NOT_FINITE and res.failed_checks()


def test_ai2_minus_at_two_rejected():
    data = synthesize_moments("AI2", 8, alphas=[3], nu1=1)
    minus = [x + 2**a for a, x in enumerate(data.sequences["w_minus"])]
    res = classify_case("AI2", MomentData("AI2", 8, {"w_plus": data.sequences["w_plus"], "w_minus": minus}))
    assert res.verdict == NOT_FINITE and res.failed_checks()


def test_ai2_half_integer_nu():
    data = synthesize_moments("AI2", 8, alphas=[3], nu1=Fraction(1, 2), nu_minus1=1)
    res = classify_case("AI2", data)
    assert res.verdict == FINITE and res.nu == {1: Fraction(1, 2), -1: 1}
    bad = synthesize_moments("AI2", 8, alphas=[3], nu1=Fraction(1, 3))
    assert classify_case("AI2", bad).verdict == NOT_FINITE


def test_synthesize_examples():
    d = synthesize_moments("DeltaA1", 3, alphas=[2])
    assert d.sequences["w"] == [Fraction(1, 8), Fraction(1, 4), Fraction(1, 2), 1, 2, 4, 8]
    assert synthesize_moments("AI1", 3, nu1=1).sequences["w"] == [1, 2, 4, 8]
    ai2 = synthesize_moments("AI2", 2, alphas=[3])
    assert ai2.sequences["w_plus"] == [1, Fraction(10, 3), Fraction(100, 9)]
    assert ai2.sequences["w_minus"] == [Fraction(8, 3), Fraction(80, 9), Fraction(800, 27)]


def test_materialize_alpha_prefers_large_root():
    assert materialize_alpha(Fraction(10, 3)) == 3
    assert materialize_alpha(Fraction(-5, 2)) == -2
    # beta^2 - 4 = 5 has no square root in Q(sqrt 2)
    assert materialize_alpha(Scalar.lift(3)) is None
    root2 = Scalar(0, 1)
    assert materialize_alpha(root2 * 2) == root2 + 1


def test_case_mismatch():
    with pytest.raises(CaseMismatch):
        classify_case("A1", synthesize_moments("AI1", 4))


alpha_pool = [2, 3, 5, Fraction(1, 7), Fraction(-2), Fraction(5, 3)]


@given(
    st.sampled_from(["DeltaA1", "A1", "AI1", "AI2"]),
    st.lists(st.sampled_from(alpha_pool), max_size=3, unique=True),
    st.sampled_from([0, Fraction(1, 2), 1, 2]),
    st.sampled_from([0, Fraction(1, 2), 1]),
)
@settings(max_examples=40)
def test_synthesis_round_trip(case, alphas, nu1, nu_m1):
    # drop pairs in the same orbit under alpha -> 1/alpha
    betas = {a + 1 / Fraction(a) for a in alphas}
    if len(betas) < len(alphas):
        return
    if case in ("DeltaA1", "A1"):
        nu1 = nu_m1 = 0
    if case == "AI1" and (nu1 != int(nu1) or nu_m1 != int(nu_m1)):
        nu1, nu_m1 = int(nu1), int(nu_m1)
    n = len(alphas)
    res = classify_case(case, synthesize_moments(case, 2 * n + 6, alphas, nu1, nu_m1))
    assert res.verdict == FINITE
    assert res.betas() == sorted(Scalar.lift(a) + 1 / Scalar.lift(a) for a in alphas)
    if case in ("AI1", "AI2"):
        assert res.nu.get(1, 0) == nu1 and res.nu.get(-1, 0) == nu_m1


def test_general_a1_untwisted_full_row():
    diagram = parse_diagram("A_1^(1)")
    nodes = synthesize_general(diagram, {0, 1}, {1: {"alphas": [3], "nu1": Fraction(1, 3), "nu_minus1": 2}}, 8)
    assert classify_general(diagram, {0, 1}, nodes).verdict == FINITE


def test_general_untwisted_empty_row():
    diagram = parse_diagram("A_2^(1)")
    params = {1: {"alphas": [2]}, 2: {"alphas": [3, 5]}}
    nodes = synthesize_general(diagram, set(), params, 10)
    res = classify_general(diagram, set(), nodes)
    assert res.verdict == FINITE
    assert all(node.case.startswith(f"node {j} (b") for j, node in res.nodes.items())


def test_general_rejects_unknown_row():
    with pytest.raises(UnknownDiagramRow):
        classify_general(parse_diagram("A_1^(1)"), {1}, {})
