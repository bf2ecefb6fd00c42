"""Affine Dynkin diagrams, marks and comarks, and the table of involutions.

Vertices use the numbering in which {1, ..., l} is a set of representatives
of the mu-orbits in the finite diagram I.  An arrow i -> j of multiplicity m
points at the shorter root j and means a_{j,i} = -m, a_{i,j} = -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .linalg import nullspace, transpose

Matrix = Tuple[Tuple[int, ...], ...]


class SingularityMismatch(ValueError):
    pass


class WrongType(ValueError):
    pass


class UnknownDiagramRow(ValueError):
    pass


# ---------------------------------------------------------------------------
# Cartan matrices


def cartan_from_edges(size: int, simple: Iterable[Tuple[int, int]] = (), arrows: Iterable[Tuple[int, int, int]] = (), base: int = 0) -> Matrix:
    """Cartan matrix on vertices base..base+size-1; arrows are (long, short, multiplicity)."""
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = 2
    for i, j in simple:
        a[i - base][j - base] = a[j - base][i - base] = -1
    for i, j, m in arrows:
        a[j - base][i - base] = -m
        a[i - base][j - base] = -1
    return tuple(tuple(row) for row in a)


def _chain(first: int, last: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(first, last)]


@dataclass(frozen=True)
class FiniteDiagram:
    """Finite diagram I = {1, ..., n} with the involution mu (a permutation, 1-based)."""

    cartan: Matrix
    mu: Tuple[int, ...]  # mu[i-1] = mu(i)

    @property
    def size(self) -> int:
        return len(self.cartan)

    def entry(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def mu_of(self, i: int) -> int:
        return self.mu[i - 1]


@dataclass(frozen=True)
class AffineDiagram:
    family: str  # A, B, ..., G
    n: int  # the finite rank in X_n^(r)
    r: int
    cartan: Matrix  # on 0..l
    finite: FiniteDiagram
    kac_numbering: Tuple[Tuple[int, int], ...] = ()  # (here, standard) where they differ

    @property
    def l(self) -> int:
        return len(self.cartan) - 1

    @property
    def label(self) -> str:
        return f"{self.family}_{self.n}^({self.r})"

    @property
    def is_a2l_twisted(self) -> bool:
        return self.family == "A" and self.r == 2 and self.n % 2 == 0

    @cached_property
    def marks(self) -> Tuple[int, ...]:
        return compute_marks(self)[0]

    @cached_property
    def comarks(self) -> Tuple[int, ...]:
        return compute_marks(self)[1]

    def mu(self, j: int) -> int:
        return 0 if j == 0 else self.finite.mu_of(j)

    def mu_relation(self, j: int) -> int:
        """a_{j,mu(j)} in I: 2 when mu(j) = j, else 0 or -1."""
        return self.finite.entry(j, self.finite.mu_of(j))

    @cached_property
    def automorphisms(self) -> List[Tuple[int, ...]]:
        return diagram_automorphisms(self.cartan)

    def __str__(self) -> str:
        return self.label


def _primitive_positive(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise SingularityMismatch(f"kernel vector {ints} is not positive")
    return tuple(ints)


def compute_marks(diagram: AffineDiagram) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(marks, comarks): primitive positive kernel vectors of A and of A^T."""
    out = []
    for mat in (diagram.cartan, transpose(diagram.cartan)):
        ker = nullspace([[Fraction(x) for x in row] for row in mat])
        if len(ker) != 1:
            raise SingularityMismatch(f"{diagram.label}: kernel has dimension {len(ker)}")
        out.append(_primitive_positive(ker[0]))
    return out[0], out[1]


def diagram_automorphisms(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """All permutations p with cartan[p(i)][p(j)] == cartan[i][j] (backtracking search)."""
    size = len(cartan)
    found: List[Tuple[int, ...]] = []
    image: List[int] = []
    used = [False] * size

    def extend() -> None:
        i = len(image)
        if i == size:
            found.append(tuple(image))
            return
        for cand in range(size):
            if used[cand]:
                continue
            if all(cartan[cand][image[k]] == cartan[i][k] and cartan[image[k]][cand] == cartan[k][i] for k in range(i)):
                used[cand] = True
                image.append(cand)
                extend()
                image.pop()
                used[cand] = False

    extend()
    return found


# ---------------------------------------------------------------------------
# diagram constructors


def _identity(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


def _finite_untwisted(cartan: Matrix) -> FiniteDiagram:
    sub = tuple(row[1:] for row in cartan[1:])
    return FiniteDiagram(sub, _identity(len(sub)))


def _untwisted(family: str, n: int) -> AffineDiagram:
    size = n + 1
    if family == "A":
        if n < 1:
            raise ValueError("A_n^(1) needs n >= 1")
        if n == 1:
            cartan = ((2, -2), (-2, 2))
        else:
            cartan = cartan_from_edges(size, _chain(0, n) + [(n, 0)])
    elif family == "B":
        if n < 3:
            raise ValueError("B_n^(1) needs n >= 3")
        cartan = cartan_from_edges(size, [(0, 2)] + _chain(1, n - 1), [(n - 1, n, 2)])
    elif family == "C":
        if n < 2:
            raise ValueError("C_n^(1) needs n >= 2")
        cartan = cartan_from_edges(size, _chain(1, n - 1), [(0, 1, 2), (n, n - 1, 2)])
    elif family == "D":
        if n < 4:
            raise ValueError("D_n^(1) needs n >= 4")
        cartan = cartan_from_edges(size, [(0, 2)] + _chain(1, n - 1) + [(n - 2, n)])
    elif family == "E" and n == 6:
        cartan = cartan_from_edges(size, [(0, 4), (1, 2), (2, 3), (3, 5), (5, 6), (3, 4)])
    elif family == "E" and n == 7:
        cartan = cartan_from_edges(size, _chain(0, 6) + [(3, 7)])
    elif family == "E" and n == 8:
        cartan = cartan_from_edges(size, _chain(0, 7) + [(5, 8)])
    elif family == "F" and n == 4:
        cartan = cartan_from_edges(size, [(0, 1), (1, 2), (3, 4)], [(2, 3, 2)])
    elif family == "G" and n == 2:
        cartan = cartan_from_edges(size, [(0, 1)], [(1, 2, 3)])
    else:
        raise ValueError(f"no untwisted affine diagram {family}_{n}")
    return AffineDiagram(family, n, 1, cartan, _finite_untwisted(cartan))


def _twisted(family: str, n: int) -> AffineDiagram:
    if family == "A" and n == 2:
        cartan = cartan_from_edges(2, arrows=[(0, 1, 4)])
        fin = FiniteDiagram(cartan_from_edges(2, [(1, 2)], base=1), (2, 1))
    elif family == "A" and n % 2 == 0 and n >= 4:
        l = n // 2
        cartan = cartan_from_edges(l + 1, _chain(1, l - 1), [(0, 1, 2), (l - 1, l, 2)])
        fin = FiniteDiagram(cartan_from_edges(n, _chain(1, n), base=1), tuple(n + 1 - i for i in range(1, n + 1)))
    elif family == "A" and n % 2 == 1 and n >= 5:
        l = (n + 1) // 2
        cartan = cartan_from_edges(l + 1, [(0, 2)] + _chain(1, l - 1), [(l, l - 1, 2)])
        fin = FiniteDiagram(cartan_from_edges(n, _chain(1, n), base=1), tuple(n + 1 - i for i in range(1, n + 1)))
    elif family == "D" and n >= 3:
        l = n - 1
        cartan = cartan_from_edges(l + 1, _chain(1, l - 1), [(1, 0, 2), (l - 1, l, 2)])
        edges = _chain(1, n - 2) + [(n - 2, n - 1), (n - 2, n)] if n > 3 else [(1, 2), (1, 3)]
        mu = tuple(list(range(1, n - 1)) + [n, n - 1])
        fin = FiniteDiagram(cartan_from_edges(n, edges, base=1), mu)
    elif family == "E" and n == 6:
        cartan = cartan_from_edges(5, [(0, 1), (1, 2), (3, 4)], [(3, 2, 2)])
        fin = FiniteDiagram(cartan_from_edges(6, [(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)], base=1), (6, 5, 3, 4, 2, 1))
        return AffineDiagram(family, n, 2, cartan, fin, ((4, 6), (5, 4), (6, 5)))
    else:
        raise ValueError(f"no twisted affine diagram {family}_{n}^(2)")
    return AffineDiagram(family, n, 2, cartan, fin)


_E6_UNTWISTED_KAC = ((4, 6), (5, 4), (6, 5))


def affine_diagram(family: str, n: int, r: int = 1) -> AffineDiagram:
    family = family.upper()
    if r == 1:
        d = _untwisted(family, n)
        if family == "E" and n == 6:
            d = AffineDiagram(d.family, d.n, d.r, d.cartan, d.finite, _E6_UNTWISTED_KAC)
        return d
    if r == 2:
        return _twisted(family, n)
    raise ValueError("r must be 1 or 2")


_LABEL_RE = re.compile(r"^\s*([A-Ga-g])_?\{?(\d+)\}?(?:\^?\{?\(?(\d)\)?\}?)?\s*$")


def parse_diagram(label: str) -> AffineDiagram:
    """Parse labels such as "A_3^(1)", "A4^(2)", "E6^{(2)}" or "D5" (untwisted)."""
    m = _LABEL_RE.match(label)
    if not m:
        raise ValueError(f"cannot parse diagram label {label!r}")
    return affine_diagram(m.group(1), int(m.group(2)), int(m.group(3) or 1))


# ---------------------------------------------------------------------------
# hard-coded h_0 and alpha^0 tables (coordinates on h_1..h_n and alpha_1..alpha_n of I)


def h0_table(diagram: AffineDiagram) -> Tuple[int, ...]:
    """Coefficients of h_0 on h_1, ..., h_n, as hard-coded data."""
    n, l = diagram.finite.size, diagram.l
    if diagram.r == 1:
        return tuple(-c for c in diagram.comarks[1:])
    fam = diagram.family
    if fam == "D":
        return tuple([-2] * (l - 1) + [-1, -1])
    if fam == "A" and n % 2 == 1:
        return tuple([-1] + [-2] * (n - 2) + [-1])
    if fam == "E":
        return (-2, -3, -4, -2, -3, -2)
    if fam == "A":
        return tuple([-1] * n)
    raise ValueError(diagram.label)


def alpha0_table(diagram: AffineDiagram) -> Tuple[int, ...]:
    """Coefficients of alpha^0 on alpha_1, ..., alpha_n, as hard-coded data."""
    n, l = diagram.finite.size, diagram.l
    if diagram.r == 1:
        return tuple(diagram.marks[1:])
    fam = diagram.family
    if fam == "D":
        return tuple([1] * l + [0])
    if fam == "A" and n % 2 == 1:
        return tuple([1] * (n - 1) + [0])
    if fam == "E":
        return (1, 2, 2, 1, 1, 1)
    if fam == "A":
        return tuple([1] * n)
    raise ValueError(diagram.label)


def w_vector(diagram: AffineDiagram, j: int) -> Tuple[int, ...]:
    """Coordinates of w_j (j >= 1) on h_1, ..., h_n."""
    n = diagram.finite.size
    v = [0] * n
    partner = diagram.mu(j)
    rel = diagram.mu_relation(j)
    if partner == j:
        v[j - 1] = 1
    elif rel == 0:
        v[j - 1] = v[partner - 1] = 1
    else:
        v[j - 1] = v[partner - 1] = 2
    return tuple(v)


def w0_check(diagram: AffineDiagram) -> bool:
    """Whether h_0 = -sum_j a_j^vee w_j holds in coordinates on h_1..h_n."""
    if diagram.is_a2l_twisted:
        raise WrongType(f"{diagram.label}: the relation is not asserted for A_2l^(2)")
    n = diagram.finite.size
    total = [0] * n
    for j in range(1, diagram.l + 1):
        for i, c in enumerate(w_vector(diagram, j)):
            total[i] -= diagram.comarks[j] * c
    return tuple(total) == h0_table(diagram)


def pairing_alpha0_h0(diagram: AffineDiagram) -> int:
    """alpha^0(h_0) = sum_{i,j} (h_0)_i a_{i,j} (alpha^0)_j; equals -2 since e_0 has weight -alpha^0."""
    h, a = h0_table(diagram), alpha0_table(diagram)
    fin = diagram.finite
    return sum(h[i] * fin.cartan[i][j] * a[j] for i in range(fin.size) for j in range(fin.size))


# ---------------------------------------------------------------------------
# finite subdiagrams


_DIMS: Dict[str, Callable[[int], int]] = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


def _components(cartan: Matrix, vertices: Sequence[int]) -> List[List[int]]:
    left = set(vertices)
    out = []
    while left:
        stack = [min(left)]
        comp = []
        left.discard(stack[0])
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in list(left):
                if cartan[v][u]:
                    left.discard(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def finite_type(cartan: Matrix, comp: Sequence[int]) -> str:
    """Cartan type (e.g. "A3", "B2", "E6") of a connected finite subdiagram."""
    size = len(comp)
    if size == 1:
        return "A1"
    deg = {v: sum(1 for u in comp if u != v and cartan[v][u]) for v in comp}
    bonds = {(u, v): cartan[u][v] * cartan[v][u] for u in comp for v in comp if u < v and cartan[u][v]}
    if len(bonds) != size - 1:
        raise ValueError("subdiagram is not a tree")
    mult = max(bonds.values())
    if mult == 3:
        return "G2"
    if mult == 2:
        (u, v), = [k for k, m in bonds.items() if m == 2]
        short = u if cartan[u][v] == -2 else v
        if size == 2:
            return "B2"
        if size == 4 and deg[u] == 2 and deg[v] == 2:
            return "F4"
        return f"B{size}" if deg[short] == 1 else f"C{size}"
    if mult >= 4:
        raise ValueError("not of finite type")
    branch = [v for v in comp if deg[v] == 3]
    if not branch:
        return f"A{size}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        raise ValueError("not of finite type")
    centre = branch[0]
    arms = []
    for start in (u for u in comp if u != centre and cartan[centre][u]):
        length, prev, cur = 1, centre, start
        while True:
            nxt = [w for w in comp if w not in (prev, cur) and cartan[cur][w]]
            if not nxt:
                break
            prev, cur, length = cur, nxt[0], length + 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{size}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{size}"
    raise ValueError("not of finite type")


def type_dimension(label: str) -> int:
    return _DIMS[label[0]](int(label[1:]))


def fixed_subalgebra(diagram: AffineDiagram, s_tilde: Iterable[int]) -> Tuple[List[str], int]:
    """Semisimple part (component types on the unpainted vertices) and centre dimension |S~| - 1."""
    s = set(s_tilde)
    rest = [v for v in range(diagram.l + 1) if v not in s]
    types = sorted(finite_type(diagram.cartan, comp) for comp in _components(diagram.cartan, rest))
    return types, len(s) - 1


def fixed_dimension(diagram: AffineDiagram, s_tilde: Iterable[int]) -> int:
    types, centre = fixed_subalgebra(diagram, s_tilde)
    return sum(type_dimension(t) for t in types) + centre


# ---------------------------------------------------------------------------
# rows of the involution table


@dataclass(frozen=True)
class InvolutionRow:
    diagram: AffineDiagram
    s_tilde: FrozenSet[int]
    constraints: str
    k: str
    k_dimension: int
    group: int  # 1 classical untwisted, 2 exceptional untwisted, 3 twisted; 0 for an extra row
    params: Tuple[Tuple[str, int], ...] = ()

    def mark_sum(self) -> int:
        return self.diagram.r * sum(self.diagram.marks[j] for j in self.s_tilde)

    def text(self) -> str:
        painted = "{" + ",".join(str(j) for j in sorted(self.s_tilde)) + "}"
        return f"{self.diagram.label}, {painted}, {self.constraints or '-'}, {self.k}"

    def key(self) -> Tuple[str, Tuple[int, ...]]:
        return self.diagram.label, canonical_subset(self.diagram, self.s_tilde)


def canonical_subset(diagram: AffineDiagram, s: Iterable[int]) -> Tuple[int, ...]:
    """Lexicographically least image of s under Aut of the affine diagram."""
    s = list(s)
    return min(tuple(sorted(p[j] for j in s)) for p in diagram.automorphisms)


def _so(m: int) -> int:
    return m * (m - 1) // 2


def _sp(m: int) -> int:
    return (m // 2) * (m + 1)


@dataclass(frozen=True)
class RowTemplate:
    family: str
    r: int
    group: int
    constraints: str
    n_of_l: Callable[[int], int]
    l_range: Callable[[int], Iterable[int]]
    k_range: Callable[[int], Iterable[Optional[int]]]
    painted: Callable[[int, Optional[int]], Sequence[int]]
    k_text: Callable[[int, Optional[int]], str]
    k_dim: Callable[[int, Optional[int]], int]

    def instances(self, rank_bound: int) -> List[InvolutionRow]:
        out = []
        for l in self.l_range(rank_bound):
            diagram = affine_diagram(self.family, self.n_of_l(l), self.r)
            for k in self.k_range(l):
                params = (("l", l),) + ((("k", k),) if k is not None else ())
                out.append(
                    InvolutionRow(diagram, frozenset(self.painted(l, k)), self.constraints, self.k_text(l, k), self.k_dim(l, k), self.group, params)
                )
        return out


def _upto(lo: int, bound: int) -> range:
    return range(lo, bound + 1)


_NONE = lambda l: [None]  # noqa: E731

ROW_TEMPLATES: List[RowTemplate] = [
    # group 1: r = 1, classical
    RowTemplate("A", 1, 1, "", lambda l: 1, lambda b: _upto(1, min(1, b)), _NONE, lambda l, k: (0, 1), lambda l, k: "C", lambda l, k: 1),
    RowTemplate(
        "A", 1, 1, "l >= 2, 1 <= k <= l", lambda l: l, lambda b: _upto(2, b), lambda l: range(1, l + 1), lambda l, k: (0, k),
        lambda l, k: f"s(gl_{k} + gl_{l - k + 1})", lambda l, k: k * k + (l - k + 1) ** 2 - 1,
    ),
    RowTemplate("B", 1, 1, "l >= 3", lambda l: l, lambda b: _upto(3, b), _NONE, lambda l, k: (0, 1), lambda l, k: f"C + so_{2 * l - 1}", lambda l, k: 1 + _so(2 * l - 1)),
    RowTemplate(
        "B", 1, 1, "l >= 3, 2 <= k <= l", lambda l: l, lambda b: _upto(3, b), lambda l: range(2, l + 1), lambda l, k: (k,),
        lambda l, k: f"so_{2 * k} + so_{2 * (l - k) + 1}", lambda l, k: _so(2 * k) + _so(2 * (l - k) + 1),
    ),
    RowTemplate("C", 1, 1, "l >= 2", lambda l: l, lambda b: _upto(2, b), _NONE, lambda l, k: (0, l), lambda l, k: f"gl_{l}", lambda l, k: l * l),
    RowTemplate(
        "C", 1, 1, "l >= 2, 1 <= k < l", lambda l: l, lambda b: _upto(2, b), lambda l: range(1, l), lambda l, k: (k,),
        lambda l, k: f"sp_{2 * k} + sp_{2 * (l - k)}", lambda l, k: _sp(2 * k) + _sp(2 * (l - k)),
    ),
    RowTemplate("D", 1, 1, "l >= 4", lambda l: l, lambda b: _upto(4, b), _NONE, lambda l, k: (0, l), lambda l, k: f"gl_{l}", lambda l, k: l * l),
    RowTemplate("D", 1, 1, "l >= 4", lambda l: l, lambda b: _upto(4, b), _NONE, lambda l, k: (0, 1), lambda l, k: f"C + so_{2 * (l - 1)}", lambda l, k: 1 + _so(2 * (l - 1))),
    RowTemplate(
        "D", 1, 1, "l >= 4, 2 <= k <= l-2", lambda l: l, lambda b: _upto(4, b), lambda l: range(2, l - 1), lambda l, k: (k,),
        lambda l, k: f"so_{2 * k} + so_{2 * (l - k)}", lambda l, k: _so(2 * k) + _so(2 * (l - k)),
    ),
    # group 2: r = 1, exceptional
    RowTemplate("E", 1, 2, "", lambda l: 6, lambda b: [6] if b >= 6 else [], _NONE, lambda l, k: (0, 1), lambda l, k: "C + so_10", lambda l, k: 46),
    RowTemplate("E", 1, 2, "", lambda l: 6, lambda b: [6] if b >= 6 else [], _NONE, lambda l, k: (4,), lambda l, k: "sl_2 + sl_6", lambda l, k: 38),
    RowTemplate("E", 1, 2, "", lambda l: 7, lambda b: [7] if b >= 7 else [], _NONE, lambda l, k: (1,), lambda l, k: "sl_2 + so_12", lambda l, k: 69),
    RowTemplate("E", 1, 2, "", lambda l: 7, lambda b: [7] if b >= 7 else [], _NONE, lambda l, k: (7,), lambda l, k: "sl_8", lambda l, k: 63),
    RowTemplate("E", 1, 2, "", lambda l: 8, lambda b: [8] if b >= 8 else [], _NONE, lambda l, k: (1,), lambda l, k: "sl_2 + e_7", lambda l, k: 136),
    RowTemplate("E", 1, 2, "", lambda l: 8, lambda b: [8] if b >= 8 else [], _NONE, lambda l, k: (7,), lambda l, k: "so_16", lambda l, k: 120),
    RowTemplate("F", 1, 2, "", lambda l: 4, lambda b: [4] if b >= 4 else [], _NONE, lambda l, k: (1,), lambda l, k: "sl_2 + sp_6", lambda l, k: 24),
    RowTemplate("F", 1, 2, "", lambda l: 4, lambda b: [4] if b >= 4 else [], _NONE, lambda l, k: (4,), lambda l, k: "so_9", lambda l, k: 36),
    RowTemplate("G", 1, 2, "", lambda l: 2, lambda b: [2] if b >= 2 else [], _NONE, lambda l, k: (1,), lambda l, k: "sl_2 + sl_2", lambda l, k: 6),
    # group 3: r = 2
    RowTemplate("A", 2, 3, "", lambda l: 2, lambda b: _upto(1, min(1, b)), _NONE, lambda l, k: (0,), lambda l, k: "so_3", lambda l, k: 3),
    RowTemplate("A", 2, 3, "l >= 2", lambda l: 2 * l, lambda b: _upto(2, b), _NONE, lambda l, k: (0,), lambda l, k: f"so_{2 * l + 1}", lambda l, k: _so(2 * l + 1)),
    RowTemplate("A", 2, 3, "l >= 3", lambda l: 2 * l - 1, lambda b: _upto(3, b), _NONE, lambda l, k: (0,), lambda l, k: f"sp_{2 * l}", lambda l, k: _sp(2 * l)),
    RowTemplate("A", 2, 3, "l >= 3", lambda l: 2 * l - 1, lambda b: _upto(3, b), _NONE, lambda l, k: (l,), lambda l, k: f"so_{2 * l}", lambda l, k: _so(2 * l)),
    RowTemplate("D", 2, 3, "l >= 2", lambda l: l + 1, lambda b: _upto(2, b), _NONE, lambda l, k: (0,), lambda l, k: f"so_{2 * l + 1}", lambda l, k: _so(2 * l + 1)),
    RowTemplate(
        "D", 2, 3, "l >= 2, 1 <= k <= l", lambda l: l + 1, lambda b: _upto(2, b), lambda l: range(1, l + 1), lambda l, k: (k,),
        lambda l, k: f"so_{2 * k + 1} + so_{2 * (l - k) + 1}", lambda l, k: _so(2 * k + 1) + _so(2 * (l - k) + 1),
    ),
    RowTemplate("E", 2, 3, "", lambda l: 6, lambda b: [4] if b >= 4 else [], _NONE, lambda l, k: (0,), lambda l, k: "f_4", lambda l, k: 52),
    RowTemplate("E", 2, 3, "", lambda l: 6, lambda b: [4] if b >= 4 else [], _NONE, lambda l, k: (4,), lambda l, k: "sp_8", lambda l, k: 36),
]

# Satisfies the mark-sum constraint, is not Aut-conjugate to any listed E_7 row,
# and has fixed subalgebra C + e_6; not among the standard table rows.
EXTRA_TEMPLATES: List[RowTemplate] = [
    RowTemplate("E", 1, 0, "", lambda l: 7, lambda b: [7] if b >= 7 else [], _NONE, lambda l, k: (0, 6), lambda l, k: "C + e_6", lambda l, k: 79),
]


def template_rows(rank_bound: int = 8, include_extra: bool = True) -> List[InvolutionRow]:
    """Every template instance with l <= rank_bound, before deduplication."""
    templates = ROW_TEMPLATES + (EXTRA_TEMPLATES if include_extra else [])
    return [row for t in templates for row in t.instances(rank_bound)]


def enumerate_rows(rank_bound: int = 8, include_extra: bool = True) -> List[InvolutionRow]:
    """Template instances up to l <= rank_bound, one per Aut-orbit of (diagram, S~)."""
    seen = set()
    out = []
    for row in template_rows(rank_bound, include_extra):
        key = row.key()
        if key not in seen:
            seen.add(key)
            out.append(row)
    return out


def candidate_subsets(diagram: AffineDiagram) -> List[Tuple[int, ...]]:
    """All S~ with r * sum_{j in S~} a_j = 2, one per Aut-orbit (exhaustive search)."""
    marks, r = diagram.marks, diagram.r
    out = set()
    for size in range(1, 3):
        for s in combinations(range(diagram.l + 1), size):
            if r * sum(marks[j] for j in s) == 2:
                out.add(canonical_subset(diagram, s))
    return sorted(out)


def find_row(diagram: AffineDiagram, s_tilde: Iterable[int]) -> Optional[InvolutionRow]:
    """The template row (or Aut-conjugate) matching (diagram, S~), if any."""
    s = frozenset(s_tilde)
    key = (diagram.label, canonical_subset(diagram, s))
    for row in template_rows(diagram.l):
        if row.diagram.label == diagram.label and row.key() == key:
            return row
    return None


def node_case(diagram: AffineDiagram, s_tilde: Iterable[int], j: int) -> str:
    """Which of the four node cases applies to vertex j >= 1.

    "a": a_{j,mu(j)} = 0; "b": mu(j) = j not in S; "c": mu(j) = j in S; "d": a_{j,mu(j)} = -1.
    """
    if not 1 <= j <= diagram.l:
        raise ValueError(f"node {j} out of range 1..{diagram.l}")
    rel = diagram.mu_relation(j)
    if rel == 2:
        return "c" if j in set(s_tilde) else "b"
    return "a" if rel == 0 else "d"


def dump_table(rank_bound: int = 8) -> List[str]:
    return [row.text() + ("" if row.group else "  [extra row]") for row in enumerate_rows(rank_bound)]
