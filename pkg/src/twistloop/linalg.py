"""Exact Gaussian elimination over Q or Q(sqrt(d)).

Vectors and matrices are plain lists; entries may be Fractions or Scalars.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

Vector = List[object]
Matrix = List[List[object]]


def _norm(x):
    return Fraction(x) if isinstance(x, int) else x


def rref(rows: Sequence[Sequence[object]]) -> tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[_norm(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if not isinstance(m[r][c], Fraction) else Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int | None = None) -> Matrix:
    """Basis of {x : A x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v: Vector = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[object]], b: Sequence[object]) -> Optional[Vector]:
    """One solution of A x = b, or None when inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x: Vector = [Fraction(0)] * ncols
    for i, p in enumerate(piv):
        x[p] = red[i][ncols]
    return x


def inverse(a: Sequence[Sequence[object]]) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence[object]], b: Sequence[Sequence[object]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[object]], v: Sequence[object]) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


class SpanBuilder:
    """Incrementally maintained echelon basis for membership tests."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: List[Vector] = []  # echelon rows, each with a leading 1
        self.leads: List[int] = []
        self.originals: List[Vector] = []

    def reduce(self, v: Sequence[object]) -> Vector:
        w = [_norm(x) for x in v]
        for row, lead in zip(self.rows, self.leads):
            if w[lead]:
                f = w[lead]
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def add(self, v: Sequence[object]) -> bool:
        """Add v; return True when it enlarged the span."""
        w = self.reduce(v)
        lead = next((i for i, x in enumerate(w) if x), None)
        if lead is None:
            return False
        inv = 1 / w[lead]
        self.rows.append([x * inv for x in w])
        self.leads.append(lead)
        self.originals.append(list(v))
        return True

    def contains(self, v: Sequence[object]) -> bool:
        return not any(self.reduce(v))

    def __len__(self) -> int:
        return len(self.rows)


def transpose(a: Sequence[Sequence[object]]) -> Matrix:
    return [list(col) for col in zip(*a)]
