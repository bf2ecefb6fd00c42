"""Matrix representations, evaluation modules and their tensor products.

A factor is either a representation of the whole finite algebra evaluated
at a point alpha in C^x, or a representation of the fixed-point subalgebra k
evaluated at +1 or -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .field import Scalar, is_half_integer_nonneg
from .laurent import ZeroPoint
from .lie import SL2, SL2xSL2, SL3, SL3_NAMED, LieAlgebraSpec, LieElement, LoopElement, get_case, span_coordinates
from .moments import MomentData

Matrix = List[List[object]]


class BadParameter(ValueError):
    pass


class PointMismatch(ValueError):
    pass


class NotWeightVector(ValueError):
    pass


def _zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def _add_mat(a: Matrix, b: Matrix, c=1) -> Matrix:
    return [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return _add_mat(linalg.matmul(a, b), linalg.matmul(b, a), -1)


def _kron(a: Matrix, b: Matrix) -> Matrix:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


@dataclass
class MatrixRep:
    """Representation of the span of ``basis`` (LieElements of ``spec``) by matrices.

    For a representation of the whole algebra the basis is the label basis.
    """

    spec: LieAlgebraSpec
    dim: int
    basis: List[LieElement]
    matrices: List[Matrix]
    highest_vector: int = 0
    name: str = ""

    def action(self, z: LieElement) -> Matrix:
        coords = span_coordinates(z, self.basis)
        if coords is None:
            raise PointMismatch(f"{z!r} does not lie in the subalgebra acting on {self.name}")
        out = _zeros(self.dim)
        for c, m in zip(coords, self.matrices):
            if c:
                out = _add_mat(out, m, c)
        return out

    def bracket_defects(self) -> List[Tuple[int, int]]:
        """Pairs of basis indices where rho([x, y]) differs from the commutator."""
        bad = []
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                if self.action(x.bracket(y)) != _commutator(self.matrices[i], self.matrices[j]):
                    bad.append((i, j))
        return bad


def _label_rep(spec: LieAlgebraSpec, mats: Dict[str, Matrix], highest: int, name: str) -> MatrixRep:
    dim = len(next(iter(mats.values())))
    basis = [spec.element(lab) for lab in spec.labels]
    return MatrixRep(spec, dim, basis, [mats.get(lab, _zeros(dim)) for lab in spec.labels], highest, name)


def _sl2_mats(m: int) -> Dict[str, Matrix]:
    """Basis v_0..v_m, h v_i = (m - 2i) v_i, f v_i = v_{i+1}, e v_i = i(m - i + 1) v_{i-1}."""
    d = m + 1
    h, e, f = _zeros(d), _zeros(d), _zeros(d)
    for i in range(d):
        h[i][i] = Fraction(m - 2 * i)
        if i + 1 < d:
            f[i + 1][i] = Fraction(1)
        if i >= 1:
            e[i - 1][i] = Fraction(i * (m - i + 1))
    return {"h": h, "e": e, "f": f}


def sl3_matrix(label: str) -> Matrix:
    """3 x 3 matrix of an sl3 label: e1 = E12, e2 = E23, f1 = E21, f2 = E32, X = -E13, Y = -E31."""
    m = _zeros(3)
    units = {"e1": (0, 1, 1), "e2": (1, 2, 1), "f1": (1, 0, 1), "f2": (2, 1, 1), "X": (0, 2, -1), "Y": (2, 0, -1)}
    if label in units:
        i, j, c = units[label]
        m[i][j] = Fraction(c)
    elif label == "h1":
        m[0][0], m[1][1] = Fraction(1), Fraction(-1)
    elif label == "h2":
        m[1][1], m[2][2] = Fraction(1), Fraction(-1)
    else:
        raise KeyError(label)
    return m


K_SO3_BASIS = ("x+", "y+", "w+")


def build_irrep(kind: str, parameter=None) -> MatrixRep:
    """Irreducible representations with a marked highest vector.

    kinds: ``sl2`` (m), ``sl2xsl2`` ((m1, m2)), ``sl3_fundamental``,
    ``k_so3`` (spin nu, w_+ has top eigenvalue nu), ``k_abelian`` (h acts by nu).
    """
    if kind == "sl2":
        m = _nonneg_int(parameter)
        return _label_rep(SL2, _sl2_mats(m), 0, f"V({m})")
    if kind == "sl2xsl2":
        m1, m2 = (_nonneg_int(x) for x in parameter)
        a, b = _sl2_mats(m1), _sl2_mats(m2)
        ia, ib = linalg.identity(m1 + 1), linalg.identity(m2 + 1)
        mats = {}
        for k in ("h", "e", "f"):
            mats[k + "1"] = _kron(a[k], ib)
            mats[k + "2"] = _kron(ia, b[k])
        return _label_rep(SL2xSL2, mats, 0, f"V({m1},{m2})")
    if kind == "sl3_fundamental":
        return _label_rep(SL3, {lab: sl3_matrix(lab) for lab in SL3.labels}, 0, "V(w1)")
    if kind == "k_so3":
        if not is_half_integer_nonneg(parameter):
            raise BadParameter(f"spin must lie in (1/2)Z>=0, got {parameter}")
        m = int(2 * Scalar.lift(parameter).a)
        s = _sl2_mats(m)
        # E = x+, F = 2 y+, H = 2 w+
        mats = [s["e"], [[x / 2 for x in row] for row in s["f"]], [[x / 2 for x in row] for row in s["h"]]]
        return MatrixRep(SL3, m + 1, [SL3_NAMED[k] for k in K_SO3_BASIS], mats, 0, f"Vk({parameter})")
    if kind == "k_abelian":
        nu = Scalar.lift(parameter if parameter is not None else 0)
        return MatrixRep(SL2, 1, [SL2.element("h")], [[[nu]]], 0, f"Vk({nu})")
    raise BadParameter(f"unknown representation kind {kind!r}")


def _nonneg_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise BadParameter(f"expected a nonnegative integer, got {x!r}")
    return x


@dataclass
class EvalModule:
    """A representation evaluated at a point: P (x) x acts by P(point) rho(x)."""

    rep: MatrixRep
    point: Scalar
    k_only: bool = False

    def __post_init__(self):
        self.point = Scalar.lift(self.point)
        if not self.point:
            raise PointMismatch("evaluation point must be nonzero")
        if self.k_only and self.point not in (1, -1):
            raise PointMismatch("k-modules are evaluated at +1 or -1")

    def matrix(self, x: LoopElement) -> Matrix:
        try:
            z = x.evaluate(self.point)
        except ZeroPoint as exc:
            raise PointMismatch(str(exc)) from exc
        return self.rep.action(z)


@dataclass
class TensorModule:
    case: str
    factors: List[EvalModule] = field(default_factory=list)

    def __post_init__(self):
        self._cache: Dict[LoopElement, Matrix] = {}
        self._factor_cache: Dict[Tuple[int, LoopElement], Matrix] = {}
        spec = get_case(self.case).spec
        for f in self.factors:
            if f.rep.spec is not spec:
                raise BadParameter(f"factor {f.rep.name} is over {f.rep.spec.name}, case needs {spec.name}")

    @property
    def dim(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.rep.dim
        return d

    @property
    def highest_index(self) -> int:
        idx = 0
        for f in self.factors:
            idx = idx * f.rep.dim + f.rep.highest_vector
        return idx

    def highest_vector(self) -> List[object]:
        v = [Fraction(0)] * self.dim
        v[self.highest_index] = Fraction(1)
        return v

    def matrix(self, x: LoopElement) -> Matrix:
        """Leibniz action sum_i 1 (x) ... (x) rho_i(x) (x) ... (x) 1."""
        if x in self._cache:
            return self._cache[x]
        dims = [f.rep.dim for f in self.factors]
        total = _zeros(self.dim)
        for i, f in enumerate(self.factors):
            left = 1
            for d in dims[:i]:
                left *= d
            right = self.dim // (left * dims[i])
            term = _kron(_kron(linalg.identity(left), self.factor_matrix(i, x)), linalg.identity(right))
            total = _add_mat(total, term)
        self._cache[x] = total
        return total

    def factor_matrix(self, i: int, x: LoopElement) -> Matrix:
        key = (i, x)
        if key not in self._factor_cache:
            self._factor_cache[key] = self.factors[i].matrix(x)
        return self._factor_cache[key]

    def act(self, x: LoopElement, v: Sequence) -> List[object]:
        """Leibniz action applied factor by factor, without forming the full matrix."""
        if x in self._cache:
            return linalg.matvec(self._cache[x], v)
        dims = [f.rep.dim for f in self.factors]
        out: List[object] = [Fraction(0)] * self.dim
        left = 1
        for i, d in enumerate(dims):
            right = self.dim // (left * d)
            m = self.factor_matrix(i, x)
            entries = [[(k, c) for k, c in enumerate(row) if c] for row in m]
            for l in range(left):
                for r in range(right):
                    base = l * d * right + r
                    col = [v[base + k * right] for k in range(d)]
                    if not any(col):
                        continue
                    for p, row in enumerate(entries):
                        acc = sum((c * col[k] for k, c in row if col[k]), Fraction(0))
                        if acc:
                            out[base + p * right] += acc
            left *= d
        return out


def loop_action(m: TensorModule, x: LoopElement, v: Sequence) -> List[object]:
    return m.act(x, v)


def evaluation_module(kind: str, parameter, point) -> EvalModule:
    return EvalModule(build_irrep(kind, parameter), point)


def k_module(case: str, nu, sign: int) -> EvalModule:
    """V_k(nu) at the fixed point sign = +1 or -1 for AI1 or AI2."""
    kind = {"AI1": "k_abelian", "AI2": "k_so3"}.get(case)
    if kind is None:
        raise BadParameter(f"{case} has no k-modules")
    return EvalModule(build_irrep(kind, nu), sign, k_only=True)


def tensor_from_params(case: str, alphas: Sequence = (), nu1=0, nu_minus1=0) -> TensorModule:
    """The tensor module whose highest-weight functional has the given parameters.

    AI1 and AI2 get k-modules at +1 and -1 (trivial when nu = 0); every alpha adds
    V(1,0) for DeltaA1, V(1) for A1 and AI1, and the fundamental module for AI2.
    """
    factor_kind = {"DeltaA1": ("sl2xsl2", (1, 0)), "A1": ("sl2", 1), "AI1": ("sl2", 1), "AI2": ("sl3_fundamental", None)}
    if case not in factor_kind:
        raise BadParameter(f"unknown case {case!r}")
    factors: List[EvalModule] = []
    if case in ("AI1", "AI2"):
        factors += [k_module(case, nu1, 1), k_module(case, nu_minus1, -1)]
    elif Scalar.lift(nu1) or Scalar.lift(nu_minus1):
        raise BadParameter(f"{case} has no nu parameters")
    kind, param = factor_kind[case]
    for alpha in alphas:
        factors.append(evaluation_module(kind, param, alpha))
    return TensorModule(case, factors)


# ---------------------------------------------------------------------------
# highest weight functional


def moment_families(case: str, a_max: int) -> Dict[str, List[Tuple[object, LoopElement]]]:
    """Named Cartan families with the loop elements whose eigenvalues are recorded."""
    c = get_case(case)
    rng = range(a_max + 1)
    if case == "DeltaA1":
        return {
            "w_plus": [(a, c.element("w_plus", a)) for a in rng],
            "w_minus": [(a, c.element("w_minus", a)) for a in rng],
            "w": [(a, c.element("w", a)) for a in range(-a_max, a_max + 1)],
        }
    if case == "A1":
        return {"w": [(a, c.element("w", a)) for a in rng]}
    if case == "AI1":
        return {"w": [(a, c.element("w", (a, 0))) for a in rng]}
    if case == "AI2":
        return {
            "w_plus": [(a, c.element("w+", (a, 0))) for a in rng],
            "w_minus": [(a, c.element("w-", (a, 1))) for a in rng],
        }
    raise KeyError(case)


def highest_weight_functional(m: TensorModule, a_max: int) -> MomentData:
    v = m.highest_vector()
    h = m.highest_index
    seqs: Dict[str, List[Scalar]] = {}
    offsets: Dict[str, int] = {}
    for name, items in moment_families(m.case, a_max).items():
        vals = []
        for a, x in items:
            w = m.act(x, v)
            lam = w[h]
            if any(w[i] for i in range(len(w)) if i != h):
                raise NotWeightVector(f"{name}[{a}] does not act by a scalar on the highest vector")
            vals.append(Scalar.lift(lam))
        seqs[name] = vals
        if items and items[0][0] != 0:
            offsets[name] = items[0][0]
    return MomentData(m.case, a_max, seqs, offsets)


# ---------------------------------------------------------------------------
# cyclic submodule and simple quotient


def generator_elements(case: str, bound: int, polarity: Optional[str] = None) -> List[LoopElement]:
    return [x for _, x in get_case(case).basis(bound, polarity)]


def default_bound(m: TensorModule, a_max: int = 1) -> int:
    return m.dim + a_max


def cyclic_submodule(m: TensorModule, bound: int | None = None) -> Tuple[List[List[object]], int]:
    """Basis (as vectors) of U(L) v for the tensor highest vector v, and its dimension."""
    if bound is None:
        bound = default_bound(m)
    gens = [m.matrix(x) for x in generator_elements(m.case, bound, "negative")]
    return _closure([m.highest_vector()], gens, m.dim)


def _closure(start: List[List[object]], gens: List[Matrix], dim: int) -> Tuple[List[List[object]], int]:
    span = linalg.SpanBuilder(dim)
    basis: List[List[object]] = []
    queue = []
    for v in start:
        if span.add(v):
            basis.append(list(v))
            queue.append(list(v))
    while queue:
        v = queue.pop()
        for g in gens:
            w = linalg.matvec(g, v)
            if span.add(w):
                basis.append(w)
                queue.append(w)
    return basis, len(basis)


def constant_cartan(case: str) -> LoopElement:
    c = get_case(case)
    return {
        "DeltaA1": lambda: c.element("w_plus", 0),
        "A1": lambda: c.element("w", 0),
        "AI1": lambda: c.element("w", (0, 0)),
        "AI2": lambda: c.element("w+", (0, 0)),
    }[case]()


def simple_quotient_dim(m: TensorModule, bound: int | None = None) -> int:
    """Dimension of the simple quotient of the cyclic module U(L) v.

    The coordinate functional at v's index vanishes on the other weight
    spaces of the constant Cartan element, whose top eigenspace is C v.
    The maximal proper submodule is the common kernel of that functional
    composed with U(L), so the quotient dimension is the rank of this family
    of functionals restricted to the cyclic module.
    """
    if bound is None:
        bound = default_bound(m)
    h = m.highest_index
    diag = m.matrix(constant_cartan(m.case))
    top = diag[h][h]
    for i in range(m.dim):
        for j in range(m.dim):
            if i != j and diag[i][j]:
                raise NotWeightVector("the constant Cartan element is not diagonal")
        if i != h and not diag[i][i] < top:
            raise NotWeightVector("the highest vector is not the unique top weight vector")
    basis, _ = cyclic_submodule(m, bound)
    gens_t = [linalg.transpose(m.matrix(x)) for x in generator_elements(m.case, bound)]
    lam = [Fraction(0)] * m.dim
    lam[h] = Fraction(1)
    functionals, _ = _closure([lam], gens_t, m.dim)
    pairing = [[sum((f[i] * b[i] for i in range(m.dim)), Fraction(0)) for b in basis] for f in functionals]
    return linalg.rank(pairing)


def submodule_generated(m: TensorModule, v: Sequence, bound: int | None = None) -> Tuple[List[List[object]], int]:
    """U(L) v for an arbitrary vector v, closing under every twisted basis element."""
    if bound is None:
        bound = default_bound(m)
    gens = [m.matrix(x) for x in generator_elements(m.case, bound)]
    return _closure([list(v)], gens, m.dim)
