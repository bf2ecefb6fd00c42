"""Words over small abelian monoids, subsequence sets and insertion maps.

Indices of subsequences are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Iterator, Sequence, Tuple, Union

Letter = Union[int, Tuple[int, int]]
Word = Tuple[Letter, ...]


class LengthMismatch(ValueError):
    pass


class Monoid(Enum):
    """The three monoids that index generators: Z, Z>=0 and Z>=0 x Z>=0."""

    INT = "Z"
    NAT = "N"
    NAT2 = "N2"

    @property
    def zero(self) -> Letter:
        return (0, 0) if self is Monoid.NAT2 else 0

    def add(self, a: Letter, b: Letter) -> Letter:
        if self is Monoid.NAT2:
            return (a[0] + b[0], a[1] + b[1])
        return a + b

    def total(self, word: Sequence[Letter]) -> Letter:
        acc = self.zero
        for x in word:
            acc = self.add(acc, x)
        return acc

    def contains(self, x) -> bool:
        if self is Monoid.NAT2:
            return (
                isinstance(x, tuple)
                and len(x) == 2
                and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in x)
            )
        if not isinstance(x, int) or isinstance(x, bool):
            return False
        return self is Monoid.INT or x >= 0

    def is_zero(self, x: Letter) -> bool:
        return x == self.zero

    def letters(self, bound: int) -> list:
        """Letters with every coordinate of absolute value <= bound."""
        if self is Monoid.INT:
            return list(range(-bound, bound + 1))
        if self is Monoid.NAT:
            return list(range(bound + 1))
        return [(a, b) for a, b in product(range(bound + 1), repeat=2)]

    def words(self, letters: Sequence[Letter], max_len: int) -> Iterator[Word]:
        for r in range(max_len + 1):
            yield from product(letters, repeat=r)


@dataclass(frozen=True)
class Subseq:
    """Strictly increasing indices 1 <= l_1 < ... < l_k <= r."""

    indices: Tuple[int, ...]
    r: int

    def __post_init__(self):
        idx = self.indices
        if any(b <= a for a, b in zip(idx, idx[1:])) or (idx and (idx[0] < 1 or idx[-1] > self.r)):
            raise ValueError(f"invalid subsequence {idx} of length {self.r}")

    @property
    def k(self) -> int:
        return len(self.indices)


def enumerate_subseqs(r: int, k: int) -> list[Subseq]:
    if not 0 <= k <= r:
        raise ValueError("need 0 <= k <= r")
    return [Subseq(c, r) for c in combinations(range(1, r + 1), k)]


def complement(s: Subseq) -> Subseq:
    taken = set(s.indices)
    return Subseq(tuple(i for i in range(1, s.r + 1) if i not in taken), s.r)


def insert(s: Subseq, j: int) -> tuple[Subseq, int]:
    """Insert the j-th complement index; return the new subsequence and its position."""
    comp = complement(s).indices
    if not 1 <= j <= len(comp):
        raise ValueError(f"complement position {j} out of range")
    new = comp[j - 1]
    merged = tuple(sorted(s.indices + (new,)))
    return Subseq(merged, s.r), merged.index(new) + 1


def word_select(a: Sequence[Letter], s: Subseq) -> tuple[Word, Word]:
    """(a_l, a^l): letters at the chosen indices and at the complement."""
    if len(a) != s.r:
        raise LengthMismatch(f"word of length {len(a)} vs subsequence of length {s.r}")
    chosen = set(s.indices)
    inside = tuple(a[i - 1] for i in s.indices)
    outside = tuple(a[i - 1] for i in range(1, s.r + 1) if i not in chosen)
    return inside, outside


def is_n_dominant(a: Sequence[Letter], n: int, monoid: Monoid) -> bool:
    if len(a) > n:
        return False
    if any(monoid.is_zero(x) for x in a):
        return False
    return all(x >= y for x, y in zip(a, a[1:]))


class Reject:
    """Marker returned by sort_to_dominant for words longer than n."""

    def __repr__(self):
        return "Reject"

    def __bool__(self):
        return False


REJECT = Reject()


def sort_to_dominant(a: Sequence[Letter], n: int, monoid: Monoid) -> Union[Word, Reject]:
    """Sort the nonzero letters decreasingly; reject when the word is longer than n."""
    if len(a) > n:
        return REJECT
    return tuple(sorted((x for x in a if not monoid.is_zero(x)), reverse=True))
