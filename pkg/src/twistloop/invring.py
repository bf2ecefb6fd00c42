"""The symmetric invariant ring C[A^n]^{S_n} in the basis m_word.

m_word = sum over permutations tau of the word and increasing index tuples
i_1 < ... < i_r of x_{i_1}^{a_tau(1)} ... x_{i_r}^{a_tau(r)}.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .combinatorics import Monoid, is_n_dominant
from .field import Scalar
from .linalg import solve
from .roots import UnsupportedField, roots_from_power_sums

Word = Tuple
Exponent = Tuple  # one monoid letter per variable


class AmbientMismatch(ValueError):
    pass


class RelationViolated(ValueError):
    """The moment data contradicts a defining relation; ``relation`` names it."""

    def __init__(self, message: str, relation: str = ""):
        super().__init__(message)
        self.relation = relation or message


def _add(target: dict, key, value) -> None:
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


# ---------------------------------------------------------------------------
# dense representation


class DensePoly:
    """Element of the monoid algebra C[A^n]: exponent tuples to coefficients."""

    __slots__ = ("n", "monoid", "coeffs")

    def __init__(self, n: int, monoid: Monoid, coeffs: Mapping[Exponent, object] | None = None):
        self.n = n
        self.monoid = monoid
        self.coeffs: Dict[Exponent, object] = {}
        for e, c in (coeffs or {}).items():
            _add(self.coeffs, tuple(e), Fraction(c) if isinstance(c, int) else c)

    def _check(self, other: "DensePoly") -> None:
        if other.n != self.n or other.monoid is not self.monoid:
            raise AmbientMismatch(f"ambient ({self.n}, {self.monoid.value}) vs ({other.n}, {other.monoid.value})")

    def __add__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            _add(out, e, c)
        return DensePoly(self.n, self.monoid, out)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + other * -1

    def __mul__(self, other) -> "DensePoly":
        if not isinstance(other, DensePoly):
            return DensePoly(self.n, self.monoid, {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        add = self.monoid.add
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                _add(out, tuple(add(x, y) for x, y in zip(e1, e2)), c1 * c2)
        return DensePoly(self.n, self.monoid, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self.n == other.n and self.monoid is other.monoid and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.monoid, frozenset(self.coeffs.items())))

    def is_symmetric(self) -> bool:
        return all(
            self.coeffs.get(tuple(e[i] for i in perm), 0) == c
            for e, c in self.coeffs.items()
            for perm in permutations(range(self.n))
        )

    def evaluate(self, pts: Sequence) -> Scalar:
        if len(pts) != self.n:
            raise AmbientMismatch(f"{len(pts)} points for ambient n = {self.n}")
        total = Scalar(0)
        for e, c in self.coeffs.items():
            term = Scalar.lift(c)
            for letter, pt in zip(e, pts):
                term = term * character(self.monoid, pt, letter)
            total = total + term
        return total

    def __repr__(self) -> str:
        return f"DensePoly(n={self.n}, {self.coeffs!r})"


def character(monoid: Monoid, pt, letter) -> Scalar:
    """Value of x^letter at a point of X = Specm C[A]."""
    if monoid is Monoid.NAT2:
        u, v = pt
        return Scalar.lift(u) ** letter[0] * Scalar.lift(v) ** letter[1]
    if monoid is Monoid.INT and not pt:
        raise ValueError("points for A = Z must be nonzero")
    return Scalar.lift(pt) ** letter


def m_expand_dense(word: Sequence, n: int, monoid: Monoid = Monoid.NAT) -> DensePoly:
    word = tuple(word)
    r = len(word)
    out: dict = {}
    if r > n:
        return DensePoly(n, monoid)
    zero = monoid.zero
    for arranged in permutations(word):
        for idx in combinations(range(n), r):
            e = [zero] * n
            for i, a in zip(idx, arranged):
                e[i] = a
            _add(out, tuple(e), Fraction(1))
    return DensePoly(n, monoid, out)


# ---------------------------------------------------------------------------
# the m-basis


def straighten(word: Sequence, n: int, monoid: Monoid) -> Tuple[Fraction, Word]:
    """m_word = coefficient * m_dominant, using m_{0*w} = (n - r) m_w and symmetry."""
    word = tuple(word)
    if len(word) > n:
        return Fraction(0), ()
    nonzero = tuple(sorted((a for a in word if not monoid.is_zero(a)), reverse=True))
    coeff = Fraction(1)
    r = len(nonzero)
    for j in range(len(word) - r):
        coeff *= n - r - j
    return coeff, nonzero


class InvPoly:
    """Linear combination of m_word over n-dominant words."""

    __slots__ = ("n", "monoid", "coeffs")

    def __init__(self, n: int, monoid: Monoid, coeffs: Mapping[Word, object] | None = None):
        self.n = n
        self.monoid = monoid
        self.coeffs: Dict[Word, object] = {}
        for w, c in (coeffs or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            k, dom = straighten(w, n, monoid)
            if k:
                _add(self.coeffs, dom, c * k)

    @classmethod
    def m(cls, word: Sequence, n: int, monoid: Monoid = Monoid.NAT) -> "InvPoly":
        return cls(n, monoid, {tuple(word): 1})

    @classmethod
    def one(cls, n: int, monoid: Monoid = Monoid.NAT) -> "InvPoly":
        return cls(n, monoid, {(): 1})

    def _check(self, other: "InvPoly") -> None:
        if other.n != self.n or other.monoid is not self.monoid:
            raise AmbientMismatch(f"ambient ({self.n}, {self.monoid.value}) vs ({other.n}, {other.monoid.value})")

    def __add__(self, other: "InvPoly") -> "InvPoly":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            _add(out, w, c)
        return InvPoly(self.n, self.monoid, out)

    def __sub__(self, other: "InvPoly") -> "InvPoly":
        return self + other * -1

    def __mul__(self, other) -> "InvPoly":
        if isinstance(other, InvPoly):
            return mul_inv(self, other)
        return InvPoly(self.n, self.monoid, {w: c * other for w, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvPoly):
            return NotImplemented
        return self.n == other.n and self.monoid is other.monoid and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.monoid, frozenset(self.coeffs.items())))

    def keys_dominant(self) -> bool:
        return all(is_n_dominant(w, self.n, self.monoid) for w in self.coeffs)

    def to_dense(self) -> DensePoly:
        out = DensePoly(self.n, self.monoid)
        for w, c in self.coeffs.items():
            out = out + m_expand_dense(w, self.n, self.monoid) * c
        return out

    @classmethod
    def from_dense(cls, p: DensePoly) -> "InvPoly":
        """Inverse of to_dense on symmetric elements (peel off the largest orbit)."""
        rest = DensePoly(p.n, p.monoid, p.coeffs)
        out: dict = {}
        while rest.coeffs:
            e = max(rest.coeffs, key=lambda e: tuple(sorted(e, reverse=True)))
            dom = tuple(sorted((a for a in e if not p.monoid.is_zero(a)), reverse=True))
            base = m_expand_dense(dom, p.n, p.monoid)
            c = rest.coeffs[e] / base.coeffs[e]
            out[dom] = c
            rest = rest - base * c
        return cls(p.n, p.monoid, out)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*m{list(w)}" for w, c in sorted(self.coeffs.items()))


_MUL_CACHE: Dict[Tuple[int, Monoid, Word, Word], Dict[Word, Fraction]] = {}


def _m_letter_times(letter, word: Word, n: int, monoid: Monoid) -> Dict[Word, Fraction]:
    """m_letter m_word = m_{letter*word} + sum_l m_{word with letter added at l}."""
    out: dict = {}
    terms = [(letter,) + word] + [word[:i] + (monoid.add(word[i], letter),) + word[i + 1 :] for i in range(len(word))]
    for t in terms:
        k, dom = straighten(t, n, monoid)
        if k:
            _add(out, dom, k)
    return out


def _basis_product(w1: Word, w2: Word, n: int, monoid: Monoid) -> Dict[Word, Fraction]:
    key = (n, monoid, w1, w2)
    if key in _MUL_CACHE:
        return _MUL_CACHE[key]
    if not w1:
        res = {w2: Fraction(1)}
    else:
        # m_{a*w} q = m_a (m_w q) - sum_l m_{w with a added at l} q
        a, rest = w1[0], w1[1:]
        res: dict = {}
        for w, c in _basis_product(rest, w2, n, monoid).items():
            for w3, c3 in _m_letter_times(a, w, n, monoid).items():
                _add(res, w3, c * c3)
        for i in range(len(rest)):
            moved = rest[:i] + (monoid.add(rest[i], a),) + rest[i + 1 :]
            k, dom = straighten(moved, n, monoid)
            if not k:
                continue
            for w3, c3 in _basis_product(dom, w2, n, monoid).items():
                _add(res, w3, -k * c3)
    _MUL_CACHE[key] = res
    return res


def mul_inv(p: InvPoly, q: InvPoly) -> InvPoly:
    p._check(q)
    out: dict = {}
    for w1, c1 in p.coeffs.items():
        for w2, c2 in q.coeffs.items():
            for w, c in _basis_product(w1, w2, p.n, p.monoid).items():
                _add(out, w, c1 * c2 * c)
    return InvPoly(p.n, p.monoid, out)


def eval_inv(p: InvPoly, pts: Sequence) -> Scalar:
    if len(pts) != p.n:
        raise AmbientMismatch(f"{len(pts)} points for ambient n = {p.n}")
    return p.to_dense().evaluate(pts)


def eval_m(word: Sequence, pts: Sequence, monoid: Monoid) -> Scalar:
    """m_word at the points, summing over injective index maps directly."""
    word = tuple(word)
    n = len(pts)
    if len(word) > n:
        return Scalar(0)
    total = Scalar(0)
    for idx in permutations(range(n), len(word)):
        term = Scalar(1)
        for i, a in zip(idx, word):
            term = term * character(monoid, pts[i], a)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# relations and point recovery


def check_relations(c: Mapping[Word, object], n: int, monoid: Monoid) -> Optional[str]:
    """First violated defining relation among the supplied values, or None."""
    c = {tuple(w): Scalar.lift(v) for w, v in c.items()}
    if () in c and c[()] != 1:
        return "m_() = 1"
    zero = monoid.zero
    if (zero,) in c and c[(zero,)] != n:
        return f"m_0 = {n}"
    for w, v in c.items():
        if len(w) > n and v:
            return f"m_{list(w)} = 0 (length > {n})"
    for w, v in sorted(c.items(), key=lambda kv: (len(kv[0]), kv[0])):
        if not w:
            continue
        a, rest = w[0], w[1:]
        moved = [rest[:i] + (monoid.add(rest[i], a),) + rest[i + 1 :] for i in range(len(rest))]
        needed = [(a,), rest] + moved
        if all(x in c or len(x) > n or not x for x in needed):
            def val(x):
                if not x:
                    return Scalar(1)
                return c.get(x, Scalar(0)) if len(x) <= n else Scalar(0)

            lhs = val((a,)) * val(rest)
            rhs = v + sum((val(x) for x in moved), Scalar(0))
            if lhs != rhs:
                return f"product rule m_{a} m_{list(rest)} = m_{list(w)} + ..."
    return None


def _lookup(c: Mapping[Word, Scalar], word: Word) -> Scalar:
    if word not in c:
        raise RelationViolated(f"missing value for word {list(word)}", "input contract")
    return c[word]


def solve_points(c: Mapping[Word, object], n: int, monoid: Monoid = Monoid.NAT) -> List:
    """A point tuple p with m_word(p) = c[word] for every supplied word.

    Needs single-letter values: letters 1..n for Z and Z>=0, and
    (a, b) with 1 <= a <= n, 0 <= b <= n together with (0, b), 1 <= b <= n,
    for Z>=0 x Z>=0. Longer words are used for verification.
    """
    c = {tuple(w): Scalar.lift(v) for w, v in c.items()}
    bad = check_relations(c, n, monoid)
    if bad:
        raise RelationViolated(f"relation violated: {bad}", bad)
    if monoid is Monoid.NAT2:
        pts = _solve_pairs(c, n)
    else:
        sums = [_lookup(c, (k,)) for k in range(1, n + 1)]
        pts = roots_from_power_sums(sums, n)
        if monoid is Monoid.INT and any(not p for p in pts):
            raise RelationViolated("a recovered point is 0, which is not a character of Z", "points in C^x")
    for w, v in sorted(c.items(), key=lambda kv: (len(kv[0]), kv[0])):
        if eval_m(w, pts, monoid) != v:
            raise RelationViolated(f"value for word {list(w)} is inconsistent with the recovered points", f"m_{list(w)}")
    return pts


def _solve_pairs(c: Mapping[Word, Scalar], n: int) -> List[Tuple[Scalar, Scalar]]:
    # second coordinates from the letters (0, b)
    second = roots_from_power_sums([_lookup(c, ((0, b),)) for b in range(1, n + 1)], n)
    groups: Dict[Scalar, int] = defaultdict(int)
    for v in second:
        groups[v] += 1
    distinct = sorted(groups)
    g = len(distinct)
    # c_{(a,b)} = sum_groups v^b S_a(group); solve the Vandermonde system per a
    vander = [[v**b for v in distinct] for b in range(g)]
    per_group: Dict[Scalar, List[Scalar]] = {v: [] for v in distinct}
    for a in range(1, max(groups.values()) + 1):
        rhs = [_lookup(c, ((a, b),)) for b in range(g)]
        sol = solve(vander, rhs)
        if sol is None:
            raise RelationViolated("inconsistent mixed moments", "Vandermonde system")
        for v, s in zip(distinct, sol):
            per_group[v].append(Scalar.lift(s))
    pts: List[Tuple[Scalar, Scalar]] = []
    for v in distinct:
        firsts = roots_from_power_sums(per_group[v], groups[v])
        pts.extend((u, v) for u in firsts)
    return sorted(pts)


def required_words(n: int, monoid: Monoid) -> List[Word]:
    """The single-letter words solve_points reads."""
    if monoid is Monoid.NAT2:
        return [((0, b),) for b in range(1, n + 1)] + [((a, b),) for a in range(1, n + 1) for b in range(n)]
    return [(k,) for k in range(1, n + 1)]


# ---------------------------------------------------------------------------
# weighted power sums


def p_prime(xs: Sequence, ys: Sequence, k: int) -> Scalar:
    """p'_k(x; y) = sum_i y_i x_i^(k-1)."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    return sum((Scalar.lift(y) * Scalar.lift(x) ** (k - 1) for x, y in zip(xs, ys)), Scalar(0))


def grouped_sums(xs: Sequence, ys: Sequence) -> Dict[Scalar, Scalar]:
    """Nonzero sums of y_i over the groups of equal x_i."""
    out: Dict[Scalar, Scalar] = {}
    for x, y in zip(xs, ys):
        key = Scalar.lift(x)
        out[key] = out.get(key, Scalar(0)) + Scalar.lift(y)
    return {x: s for x, s in out.items() if s}


__all__ = [
    "AmbientMismatch",
    "DensePoly",
    "InvPoly",
    "RelationViolated",
    "UnsupportedField",
    "character",
    "check_relations",
    "eval_inv",
    "eval_m",
    "grouped_sums",
    "m_expand_dense",
    "mul_inv",
    "p_prime",
    "required_words",
    "solve_points",
    "straighten",
]
