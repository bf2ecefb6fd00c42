from fractions import Fraction
from itertools import product

import pytest

from twistloop import linalg
from twistloop.checks import repr_suite
from twistloop.classifier import synthesize_moments
from twistloop.lie import SL2, SL3, SL3_NAMED, get_case
from twistloop.representations import (
    BadParameter,
    TensorModule,
    build_irrep,
    cyclic_submodule,
    evaluation_module,
    highest_weight_functional,
    k_module,
    loop_action,
    simple_quotient_dim,
    submodule_generated,
    tensor_from_params,
)


def _diag(m):
    return [m[i][i] for i in range(len(m))]


def test_irrep_examples():
    rep = build_irrep("sl2", 1)
    assert rep.dim == 2 and rep.action(SL2.element("h")) == [[1, 0], [0, -1]]
    so3 = build_irrep("k_so3", 1)
    assert so3.dim == 3 and _diag(so3.action(SL3_NAMED["w+"])) == [1, 0, -1]
    fund = build_irrep("sl3_fundamental")
    assert fund.action(SL3.element("h1")) == [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    assert fund.action(SL3.element("h2")) == [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
    for kind, param in [("sl2", 2), ("sl2xsl2", (1, 1)), ("sl3_fundamental", None), ("k_so3", Fraction(1, 2))]:
        assert build_irrep(kind, param).bracket_defects() == []


def test_bad_parameters():
    with pytest.raises(BadParameter):
        build_irrep("k_so3", Fraction(1, 3))
    with pytest.raises(BadParameter):
        tensor_from_params("A1", alphas=[2], nu1=1)


def test_loop_action_examples():
    alpha = Fraction(3)
    m = TensorModule("DeltaA1", [evaluation_module("sl2xsl2", (1, 0), alpha)])
    v = m.highest_vector()
    case = get_case("DeltaA1")
    for a in (-2, 0, 3):
        assert loop_action(m, case.element("w", a), v) == [alpha**a * x for x in v]
    nu = Fraction(5, 2)
    k = TensorModule("AI1", [k_module("AI1", nu, 1)])
    for a in range(4):
        assert loop_action(k, get_case("AI1").element("w", (a, 0)), k.highest_vector()) == [2**a * nu]


def test_functional_examples():
    alpha = Fraction(3)
    got = highest_weight_functional(TensorModule("AI2", [evaluation_module("sl3_fundamental", None, alpha)]), 4)
    beta, gamma = alpha + 1 / alpha, alpha - 1 / alpha
    assert got.sequences["w_plus"] == [beta**a for a in range(5)]
    assert got.sequences["w_minus"] == [beta**a * gamma for a in range(5)]
    nu, nu2 = Fraction(1, 3), Fraction(2)
    m = TensorModule("AI1", [k_module("AI1", nu, 1), k_module("AI1", nu2, -1)])
    assert highest_weight_functional(m, 5).sequences["w"] == [nu * 2**a + nu2 * (-2) ** a for a in range(6)]
    empty = highest_weight_functional(TensorModule("DeltaA1", []), 3)
    assert all(not x for seq in empty.sequences.values() for x in seq)


@pytest.mark.parametrize("case,params", [
    ("DeltaA1", dict(alphas=[2, Fraction(1, 7)])),
    ("A1", dict(alphas=[3, 5])),
    ("AI1", dict(alphas=[5], nu1=1, nu_minus1=Fraction(1, 3))),
    ("AI2", dict(alphas=[2], nu1=Fraction(1, 2), nu_minus1=1)),
])
def test_functional_matches_synthesis(case, params):
    got = highest_weight_functional(tensor_from_params(case, **params), 6)
    assert got.sequences == synthesize_moments(case, 6, **params).sequences


def test_positive_part_annihilates_highest_vector():
    for case, params in [("A1", dict(alphas=[2, 3])), ("AI2", dict(alphas=[3], nu1=1))]:
        m = tensor_from_params(case, **params)
        v = m.highest_vector()
        for _, x in get_case(case).basis(3, "positive"):
            assert not any(loop_action(m, x, v))


def test_cyclic_submodule_examples():
    single = TensorModule("DeltaA1", [evaluation_module("sl2xsl2", (1, 0), 2)])
    assert cyclic_submodule(single)[1] == 2
    assert cyclic_submodule(TensorModule("A1", []))[1] == 1
    distinct = TensorModule("A1", [evaluation_module("sl2", 1, 2), evaluation_module("sl2", 1, 3)])
    assert cyclic_submodule(distinct)[1] == 4


def _brute_force_quotient_dim(m):
    """Enumerate submodules generated by small integer vectors of the cyclic module."""
    basis, dim = cyclic_submodule(m)
    h = m.highest_index
    proper = []
    for coeffs in product((-1, 0, 1), repeat=dim):
        if not any(coeffs):
            continue
        v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(m.dim)]
        sub, _ = submodule_generated(m, v)
        unit = [Fraction(int(i == h)) for i in range(m.dim)]
        if linalg.rank(sub + [unit]) > len(sub):
            proper += sub
    return dim - (linalg.rank(proper) if proper else 0)


def test_simple_quotient_against_brute_force():
    single = TensorModule("DeltaA1", [evaluation_module("sl2xsl2", (1, 0), 2)])
    same = TensorModule("A1", [evaluation_module("sl2", 1, 2), evaluation_module("sl2", 1, 2)])
    distinct = TensorModule("A1", [evaluation_module("sl2", 1, 2), evaluation_module("sl2", 1, 3)])
    assert simple_quotient_dim(single) == 2 == _brute_force_quotient_dim(single)
    assert simple_quotient_dim(same) == 3 == _brute_force_quotient_dim(same)
    assert simple_quotient_dim(distinct) == 4 == _brute_force_quotient_dim(distinct)
    assert simple_quotient_dim(TensorModule("AI1", [])) == 1


def test_repr_suite_passes():
    records = repr_suite(bound=2)
    assert records and all(r.passed for r in records), [r for r in records if not r.passed]


def test_factorwise_action_matches_dense_matrix():
    import random

    rng = random.Random(1)
    m = tensor_from_params("AI2", alphas=[2, Fraction(1, 3)], nu1=Fraction(1, 2), nu_minus1=1)
    for _, x in get_case("AI2").basis(1):
        v = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m.dim)]
        fresh = tensor_from_params("AI2", alphas=[2, Fraction(1, 3)], nu1=Fraction(1, 2), nu_minus1=1)
        assert fresh.act(x, v) == linalg.matvec(m.matrix(x), v)
