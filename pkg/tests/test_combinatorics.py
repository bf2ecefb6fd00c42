from math import comb

import pytest
from hypothesis import given, strategies as st

from twistloop.combinatorics import (
    REJECT,
    LengthMismatch,
    Monoid,
    complement,
    enumerate_subseqs,
    insert,
    is_n_dominant,
    sort_to_dominant,
    word_select,
)


@given(st.integers(0, 7).flatmap(lambda r: st.tuples(st.just(r), st.integers(0, r))))
def test_subsequence_counts(rk):
    r, k = rk
    subs = enumerate_subseqs(r, k)
    assert len(subs) == comb(r, k)
    for s in subs:
        c = complement(s)
        assert sorted(s.indices + c.indices) == list(range(1, r + 1))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6), st.data())
def test_word_select_partitions_letters(word, data):
    k = data.draw(st.integers(0, len(word)))
    sub = data.draw(st.sampled_from(enumerate_subseqs(len(word), k)))
    inside, outside = word_select(word, sub)
    assert sorted(inside + outside) == sorted(word)
    assert len(inside) == k


def test_word_select_length_mismatch():
    with pytest.raises(LengthMismatch):
        word_select((1, 2), enumerate_subseqs(3, 1)[0])


def test_insert():
    s = enumerate_subseqs(4, 2)[0]  # (1, 2)
    new, pos = insert(s, 1)
    assert new.indices == (1, 2, 3) and pos == 3


def test_monoid_letters():
    assert Monoid.INT.letters(1) == [-1, 0, 1]
    assert Monoid.NAT.letters(2) == [0, 1, 2]
    assert len(Monoid.NAT2.letters(2)) == 9
    assert Monoid.NAT2.add((1, 2), (3, 4)) == (4, 6)


def test_dominance():
    assert is_n_dominant((3, 1), 2, Monoid.NAT)
    assert not is_n_dominant((1, 3), 2, Monoid.NAT)
    assert not is_n_dominant((3, 0), 2, Monoid.NAT)
    assert sort_to_dominant((1, 3), 2, Monoid.NAT) == (3, 1)
    assert sort_to_dominant((1, 2, 3), 2, Monoid.NAT) is REJECT
