from itertools import combinations, permutations

import pytest

from twistloop.checks import KNOWN_MARKS, dynkin_suite
from twistloop.dynkin import (
    WrongType,
    candidate_subsets,
    compute_marks,
    enumerate_rows,
    find_row,
    h0_table,
    pairing_alpha0_h0,
    parse_diagram,
    w0_check,
)


def test_marks_a1():
    assert compute_marks(parse_diagram("A_1^(1)")) == ((1, 1), (1, 1))


@pytest.mark.parametrize("label", sorted(KNOWN_MARKS))
def test_marks_against_standard_tables(label):
    marks, comarks = compute_marks(parse_diagram(label))
    assert (tuple(sorted(marks)), tuple(sorted(comarks))) == KNOWN_MARKS[label]


def test_h0_tables():
    # h_0 coefficients on h_1..h_n of the underlying finite diagram
    assert h0_table(parse_diagram("A_5^(2)")) == (-1, -2, -2, -2, -1)
    assert h0_table(parse_diagram("E_6^(2)")) == (-2, -3, -4, -2, -3, -2)
    assert h0_table(parse_diagram("D_3^(2)")) == (-2, -1, -1)


def test_w0_examples():
    assert w0_check(parse_diagram("A_1^(1)"))
    assert w0_check(parse_diagram("D_3^(2)"))
    with pytest.raises(WrongType):
        w0_check(parse_diagram("A_4^(2)"))


def test_alpha0_pairing():
    for label in ("A_3^(1)", "D_4^(2)", "A_5^(2)", "E_6^(2)", "G_2^(1)"):
        assert pairing_alpha0_h0(parse_diagram(label)) == -2


def test_row_examples():
    texts = {(r.diagram.label, tuple(sorted(r.s_tilde))): r for r in enumerate_rows(4)}
    assert ("A_1^(1)", (0, 1)) in texts
    b3 = texts[("B_3^(1)", (0, 1))]
    assert b3.k == "C + so_5"
    # marks of all four nodes sum to 4
    assert find_row(parse_diagram("A_3^(1)"), {0, 1, 2, 3}) is None


def test_rows_satisfy_mark_sum():
    for row in enumerate_rows(8):
        assert row.mark_sum() == 2, row.text()


def _brute_automorphisms(diagram):
    cartan = diagram.cartan
    size = len(cartan)
    return [p for p in permutations(range(size)) if all(cartan[p[i]][p[j]] == cartan[i][j] for i in range(size) for j in range(size))]


def test_rows_pairwise_non_conjugate():
    rows = enumerate_rows(6)
    by_label = {}
    for row in rows:
        by_label.setdefault(row.diagram.label, []).append(row)
    for label, group in by_label.items():
        autos = _brute_automorphisms(group[0].diagram)
        for r1, r2 in combinations(group, 2):
            assert not any(frozenset(p[j] for j in r1.s_tilde) == r2.s_tilde for p in autos), (r1.text(), r2.text())


def test_rows_match_candidates():
    rows = enumerate_rows(6)
    for label in ("A_3^(1)", "B_4^(1)", "C_3^(1)", "D_5^(1)", "E_6^(1)", "A_5^(2)", "D_4^(2)"):
        diagram = parse_diagram(label)
        found = sorted(r.key()[1] for r in rows if r.diagram.label == label)
        assert found == candidate_subsets(diagram)


def test_dynkin_suite_passes():
    records = dynkin_suite(rank_bound=6)
    assert records and all(r.passed for r in records), [r for r in records if not r.passed]
