"""Finite Lie algebras sl2, sl2+sl2, sl3 and their twisted loop algebras.

A loop element is a finite sum of c * t^n (x) label.  The four twisted
cases fix the involution t^n (x) x -> t^-n (x) theta(x):

* ``DeltaA1``: sl2 + sl2 with theta swapping the factors;
* ``A1``: sl2 with theta = id;
* ``AI1``: sl2 with theta negating e and f (Onsager algebra);
* ``AI2``: sl3 with theta induced by the diagram flip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from .combinatorics import Monoid
from .laurent import LaurentPoly
from . import linalg

NEGATIVE, CARTAN, POSITIVE = "negative", "cartan", "positive"
_POLARITY_RANK = {NEGATIVE: 0, CARTAN: 1, POSITIVE: 2}


class SpecMismatch(ValueError):
    pass


class NotTwisted(ValueError):
    pass


class NotAutomorphism(ValueError):
    pass


def _clean(coeffs: Mapping) -> dict:
    out = {}
    for k, c in coeffs.items():
        if isinstance(c, int):
            c = Fraction(c)
        if c:
            out[k] = c
    return out


def _accumulate(target: dict, key, value) -> None:
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    name: str
    labels: Tuple[str, ...]
    table: Dict[Tuple[str, str], Dict[str, Fraction]]
    polarity: Dict[str, str]
    # Chevalley generators per node index: (e_i, f_i, h_i)
    chevalley: Dict[int, Tuple[str, str, str]]
    # labels defined as brackets of other labels, in dependency order
    derived: Tuple[Tuple[str, str, str], ...] = ()

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def bracket_labels(self, a: str, b: str) -> Dict[str, Fraction]:
        if (a, b) in self.table:
            return self.table[(a, b)]
        if (b, a) in self.table:
            return {k: -v for k, v in self.table[(b, a)].items()}
        return {}

    def element(self, coeffs: Mapping[str, object] | str) -> "LieElement":
        if isinstance(coeffs, str):
            coeffs = {coeffs: 1}
        for k in coeffs:
            if k not in self.labels:
                raise KeyError(f"{k!r} is not a label of {self.name}")
        return LieElement(self, _clean(coeffs))


class LieElement:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: LieAlgebraSpec, coeffs: Mapping[str, object]):
        self.spec = spec
        self.coeffs = _clean(coeffs)

    def _check(self, other: "LieElement") -> None:
        if other.spec is not self.spec:
            raise SpecMismatch(f"{self.spec.name} vs {other.spec.name}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _accumulate(out, k, v)
        return LieElement(self.spec, out)

    def __neg__(self) -> "LieElement":
        return LieElement(self.spec, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, c) -> "LieElement":
        return LieElement(self.spec, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def bracket(self, other: "LieElement") -> "LieElement":
        self._check(other)
        out: dict = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                for k, v in self.spec.bracket_labels(a, b).items():
                    _accumulate(out, k, ca * cb * v)
        return LieElement(self.spec, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.spec is other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return _format_terms(((c, lab) for lab, c in self.coeffs.items()), self.spec)


def _format_terms(terms: Iterable[Tuple[object, str]], spec: LieAlgebraSpec) -> str:
    parts = []
    for c, text in terms:
        c = Fraction(c) if isinstance(c, int) else c
        s = str(c)
        parts.append(f"{s}*{text}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _table(entries: Mapping[Tuple[str, str], Mapping[str, int]]) -> Dict[Tuple[str, str], Dict[str, Fraction]]:
    return {k: {lab: Fraction(v) for lab, v in d.items()} for k, d in entries.items()}


SL2 = LieAlgebraSpec(
    name="sl2",
    labels=("f", "h", "e"),
    table=_table({("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}}),
    polarity={"f": NEGATIVE, "h": CARTAN, "e": POSITIVE},
    chevalley={1: ("e", "f", "h")},
)

SL2xSL2 = LieAlgebraSpec(
    name="sl2+sl2",
    labels=("f1", "f2", "h1", "h2", "e1", "e2"),
    table=_table(
        {
            ("e1", "f1"): {"h1": 1},
            ("h1", "e1"): {"e1": 2},
            ("h1", "f1"): {"f1": -2},
            ("e2", "f2"): {"h2": 1},
            ("h2", "e2"): {"e2": 2},
            ("h2", "f2"): {"f2": -2},
        }
    ),
    polarity={"f1": NEGATIVE, "f2": NEGATIVE, "h1": CARTAN, "h2": CARTAN, "e1": POSITIVE, "e2": POSITIVE},
    chevalley={1: ("e1", "f1", "h1"), 2: ("e2", "f2", "h2")},
)

# Generated from the matrix realization e1 = E12, e2 = E23, f1 = E21, f2 = E32,
# h1 = E11 - E22, h2 = E22 - E33, X = [e2, e1] = -E13, Y = [f1, f2] = -E31
# (see tests/test_lie.py for the check against that realization).
SL3 = LieAlgebraSpec(
    name="sl3",
    labels=("f1", "f2", "Y", "h1", "h2", "e1", "e2", "X"),
    table=_table(
        {
            ("f1", "f2"): {"Y": 1},
            ("f1", "h1"): {"f1": 2},
            ("f1", "h2"): {"f1": -1},
            ("f1", "e1"): {"h1": -1},
            ("f1", "X"): {"e2": -1},
            ("f2", "h1"): {"f2": -1},
            ("f2", "h2"): {"f2": 2},
            ("f2", "e2"): {"h2": -1},
            ("f2", "X"): {"e1": 1},
            ("Y", "h1"): {"Y": 1},
            ("Y", "h2"): {"Y": 1},
            ("Y", "e1"): {"f2": -1},
            ("Y", "e2"): {"f1": 1},
            ("Y", "X"): {"h1": -1, "h2": -1},
            ("h1", "e1"): {"e1": 2},
            ("h1", "e2"): {"e2": -1},
            ("h1", "X"): {"X": 1},
            ("h2", "e1"): {"e1": -1},
            ("h2", "e2"): {"e2": 2},
            ("h2", "X"): {"X": 1},
            ("e1", "e2"): {"X": -1},
        }
    ),
    polarity={
        "f1": NEGATIVE,
        "f2": NEGATIVE,
        "Y": NEGATIVE,
        "h1": CARTAN,
        "h2": CARTAN,
        "e1": POSITIVE,
        "e2": POSITIVE,
        "X": POSITIVE,
    },
    chevalley={1: ("e1", "f1", "h1"), 2: ("e2", "f2", "h2")},
    derived=(("X", "e2", "e1"), ("Y", "f1", "f2")),
)


def involution_from_diagram(spec: LieAlgebraSpec, mu: Mapping[int, int], signed: Iterable[int]) -> Dict[str, LieElement]:
    """theta(e_i) = e_mu(i) (negated when i is in ``signed``), same for f; theta(h_i) = h_mu(i)."""
    signed = set(signed)
    images: Dict[str, LieElement] = {}
    for i, (e, f, h) in spec.chevalley.items():
        j = mu.get(i, i)
        ej, fj, hj = spec.chevalley[j]
        sign = -1 if i in signed else 1
        images[e] = spec.element({ej: sign})
        images[f] = spec.element({fj: sign})
        images[h] = spec.element({hj: 1})
    for lab, a, b in spec.derived:
        images[lab] = images[a].bracket(images[b])
    return images


def apply_linear(images: Mapping[str, LieElement], x: LieElement) -> LieElement:
    out = LieElement(x.spec, {})
    for lab, c in x.coeffs.items():
        out = out + images[lab] * c
    return out


# sl3 named elements used by the AI2 case
def _sl3_named() -> Dict[str, LieElement]:
    E = SL3.element
    n = {
        "X": E("X"),
        "Y": E("Y"),
        "x+": E({"e1": 1, "e2": 1}),
        "x-": E({"e1": 1, "e2": -1}),
        "y+": E({"f1": 1, "f2": 1}),
        "y-": E({"f1": 1, "f2": -1}),
        "w+": E({"h1": 1, "h2": 1}),
        "w-": E({"h1": 1, "h2": -1}),
    }
    n["u-1"] = n["y+"] * 2
    n["u0"] = n["w+"] * 2
    n["u1"] = -n["x+"]
    n["v-2"] = n["Y"] * 4
    n["v-1"] = n["y-"] * -4
    n["v0"] = n["w-"] * -2
    n["v1"] = n["x-"] * 2
    n["v2"] = n["X"]
    return n


SL3_NAMED = _sl3_named()


class LoopElement:
    """Finite sum of c * t^n (x) label over a fixed spec."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: LieAlgebraSpec, coeffs: Mapping[Tuple[int, str], object] | None = None):
        self.spec = spec
        self.coeffs = _clean(coeffs or {})

    @classmethod
    def tensor(cls, spec: LieAlgebraSpec, poly: LaurentPoly, x: LieElement | str) -> "LoopElement":
        if isinstance(x, str):
            x = spec.element(x)
        out: dict = {}
        for n, c in poly.coeffs.items():
            for lab, d in x.coeffs.items():
                _accumulate(out, (n, lab), c * d)
        return cls(spec, out)

    def _check(self, other: "LoopElement") -> None:
        if other.spec is not self.spec:
            raise SpecMismatch(f"{self.spec.name} vs {other.spec.name}")

    def __add__(self, other: "LoopElement") -> "LoopElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _accumulate(out, k, v)
        return LoopElement(self.spec, out)

    def __neg__(self) -> "LoopElement":
        return LoopElement(self.spec, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "LoopElement") -> "LoopElement":
        return self + (-other)

    def __mul__(self, c) -> "LoopElement":
        return LoopElement(self.spec, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def bracket(self, other: "LoopElement") -> "LoopElement":
        self._check(other)
        out: dict = {}
        for (m, a), ca in self.coeffs.items():
            for (n, b), cb in other.coeffs.items():
                for k, v in self.spec.bracket_labels(a, b).items():
                    _accumulate(out, (m + n, k), ca * cb * v)
        return LoopElement(self.spec, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self.spec is other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def label_parts(self) -> Dict[str, LaurentPoly]:
        """The Laurent coefficient of each label."""
        parts: Dict[str, dict] = {}
        for (n, lab), c in self.coeffs.items():
            parts.setdefault(lab, {})[n] = c
        return {lab: LaurentPoly(p) for lab, p in parts.items()}

    def evaluate(self, alpha) -> LieElement:
        """Substitute t = alpha, giving an element of the finite algebra."""
        return LieElement(self.spec, {lab: p.eval(alpha) for lab, p in self.label_parts().items()})

    def __repr__(self) -> str:
        order = sorted(self.coeffs, key=lambda k: (-k[0], self.spec.index(k[1])))
        return _format_terms(((self.coeffs[k], f"t^{k[0]}({k[1]})") for k in order), self.spec)


def bracket(x: LoopElement, y: LoopElement) -> LoopElement:
    return x.bracket(y)


@dataclass(eq=False)
class TwistedCase:
    """One of the four twisted loop algebras with its named elements."""

    tag: str
    spec: LieAlgebraSpec
    theta: Dict[str, LieElement]
    monoid: Monoid
    families: Dict[str, Callable[[object], LoopElement]] = field(default_factory=dict)
    # (family, polarity, fixed second index or None) of the twisted basis
    basis_families: Tuple[Tuple[str, str, object], ...] = ()
    cartan_families: Tuple[str, ...] = ()

    def element(self, family: str, index) -> LoopElement:
        try:
            make = self.families[family]
        except KeyError:
            raise KeyError(f"{self.tag} has no family {family!r}") from None
        return make(index)

    def theta_loop(self, x: LoopElement) -> LoopElement:
        if x.spec is not self.spec:
            raise SpecMismatch(f"{x.spec.name} element in the {self.tag} case")
        out: dict = {}
        for (n, lab), c in x.coeffs.items():
            for lab2, d in self.theta[lab].coeffs.items():
                _accumulate(out, (-n, lab2), c * d)
        return LoopElement(self.spec, out)

    def is_fixed(self, x: LoopElement) -> bool:
        return self.theta_loop(x) == x

    def triangular_split(self, x: LoopElement) -> Tuple[LoopElement, LoopElement, LoopElement]:
        if not self.is_fixed(x):
            raise NotTwisted("element is not fixed by the twist")
        parts = {NEGATIVE: {}, CARTAN: {}, POSITIVE: {}}
        for (n, lab), c in x.coeffs.items():
            parts[self.spec.polarity[lab]][(n, lab)] = c
        return tuple(LoopElement(self.spec, parts[p]) for p in (NEGATIVE, CARTAN, POSITIVE))

    def basis_indices(self, bound: int) -> List[Tuple[str, object]]:
        """(family, index) pairs of the twisted basis with first index <= bound."""
        out = []
        for fam, _pol, second in self.basis_families:
            if self.monoid is Monoid.INT:
                out += [(fam, a) for a in range(-bound, bound + 1)]
            elif self.monoid is Monoid.NAT:
                out += [(fam, a) for a in range(bound + 1)]
            else:
                out += [(fam, (a, second)) for a in range(bound + 1)]
        return out

    def basis(self, bound: int, polarity: str | None = None) -> List[Tuple[Tuple[str, object], LoopElement]]:
        pols = {fam: pol for fam, pol, _ in self.basis_families}
        return [
            ((fam, idx), self.element(fam, idx))
            for fam, idx in self.basis_indices(bound)
            if polarity is None or pols[fam] == polarity
        ]


def _tp(spec, poly, x):
    return LoopElement.tensor(spec, poly, x)


def _build_delta_a1() -> TwistedCase:
    spec = SL2xSL2
    theta = involution_from_diagram(spec, {1: 2, 2: 1}, ())

    def pair(l1, l2):
        return lambda a: LoopElement(spec, {(a, l1): 1}) + LoopElement(spec, {(-a, l2): 1})

    tp, tm = LaurentPoly.t_plus(), LaurentPoly.t_minus()
    fams = {
        "x": pair("e1", "e2"),
        "y": pair("f1", "f2"),
        "w": pair("h1", "h2"),
        "w_plus": lambda a: _tp(spec, tp**a, spec.element({"h1": 1, "h2": 1})),
        "w_minus": lambda a: _tp(spec, tp**a * tm, spec.element({"h1": 1, "h2": -1})),
    }
    return TwistedCase(
        "DeltaA1", spec, theta, Monoid.INT, fams,
        (("x", POSITIVE, None), ("y", NEGATIVE, None), ("w", CARTAN, None)),
        ("w_plus", "w_minus"),
    )


def _build_a1() -> TwistedCase:
    spec = SL2
    theta = involution_from_diagram(spec, {}, ())
    tp = LaurentPoly.t_plus()
    fams = {k: (lambda lab: lambda a: _tp(spec, tp**a, lab))(lab) for k, lab in (("x", "e"), ("y", "f"), ("w", "h"))}
    return TwistedCase(
        "A1", spec, theta, Monoid.NAT, fams,
        (("x", POSITIVE, None), ("y", NEGATIVE, None), ("w", CARTAN, None)),
        ("w",),
    )


def _build_ai1() -> TwistedCase:
    spec = SL2
    theta = involution_from_diagram(spec, {}, (1,))

    def fam(lab):
        return lambda ab: _tp(spec, LaurentPoly.plus_minus_power(ab[0], ab[1]), lab)

    fams = {"x": fam("e"), "y": fam("f"), "w": fam("h")}
    return TwistedCase(
        "AI1", spec, theta, Monoid.NAT2, fams,
        (("x", POSITIVE, 1), ("y", NEGATIVE, 1), ("w", CARTAN, 0)),
        ("w",),
    )


def _build_ai2() -> TwistedCase:
    spec = SL3
    theta = involution_from_diagram(spec, {1: 2, 2: 1}, ())

    def fam(x):
        return lambda ab: _tp(spec, LaurentPoly.plus_minus_power(ab[0], ab[1]), x)

    fams = {name: fam(x) for name, x in SL3_NAMED.items()}
    for lab in spec.labels:
        fams.setdefault(lab, fam(spec.element(lab)))
    return TwistedCase(
        "AI2", spec, theta, Monoid.NAT2, fams,
        (
            ("x+", POSITIVE, 0), ("y+", NEGATIVE, 0), ("w+", CARTAN, 0),
            ("X", POSITIVE, 1), ("x-", POSITIVE, 1), ("w-", CARTAN, 1),
            ("y-", NEGATIVE, 1), ("Y", NEGATIVE, 1),
        ),
        ("w+", "w-"),
    )


CASES: Dict[str, TwistedCase] = {
    c.tag: c for c in (_build_delta_a1(), _build_a1(), _build_ai1(), _build_ai2())
}


def get_case(tag: str) -> TwistedCase:
    try:
        return CASES[tag]
    except KeyError:
        raise KeyError(f"unknown case {tag!r}; expected one of {sorted(CASES)}") from None


def theta_loop(case: str | TwistedCase, x: LoopElement) -> LoopElement:
    case = get_case(case) if isinstance(case, str) else case
    return case.theta_loop(x)


def triangular_split(case: str | TwistedCase, x: LoopElement):
    case = get_case(case) if isinstance(case, str) else case
    return case.triangular_split(x)


def check_jacobi(spec: LieAlgebraSpec) -> List[Tuple[str, str, str]]:
    """Label triples violating antisymmetry or the Jacobi identity."""
    bad = []
    E = spec.element
    for a, b in product(spec.labels, repeat=2):
        if E(a).bracket(E(b)) != -(E(b).bracket(E(a))):
            bad.append((a, b, ""))
    for a, b, c in product(spec.labels, repeat=3):
        x, y, z = E(a), E(b), E(c)
        total = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
        if total:
            bad.append((a, b, c))
    return bad


def _matrix_of(images: Mapping[str, LieElement], spec: LieAlgebraSpec) -> List[List[Fraction]]:
    return [[images[lab].coeffs.get(row, Fraction(0)) for lab in spec.labels] for row in spec.labels]


def conjugate_twist(phi: Mapping[str, LieElement], case: str | TwistedCase, bound: int = 3) -> Dict[str, bool]:
    """Check that phi carries the theta-twisted algebra onto the phi theta phi^-1 twisted one."""
    case = get_case(case) if isinstance(case, str) else case
    spec = case.spec
    E = spec.element
    for a, b in product(spec.labels, repeat=2):
        if apply_linear(phi, E(a).bracket(E(b))) != phi[a].bracket(phi[b]):
            raise NotAutomorphism(f"phi does not preserve [{a}, {b}]")
    mat = _matrix_of(phi, spec)
    if linalg.rank(mat) != len(spec.labels):
        raise NotAutomorphism("phi is not invertible")
    inv = linalg.inverse(mat)
    phi_inv = {
        lab: spec.element({row: inv[i][j] for i, row in enumerate(spec.labels)})
        for j, lab in enumerate(spec.labels)
    }
    new_theta = {lab: apply_linear(phi, apply_linear(case.theta, phi_inv[lab])) for lab in spec.labels}

    def phi_loop(x: LoopElement) -> LoopElement:
        out: dict = {}
        for (n, lab), c in x.coeffs.items():
            for lab2, d in phi[lab].coeffs.items():
                _accumulate(out, (n, lab2), c * d)
        return LoopElement(spec, out)

    def new_theta_loop(x: LoopElement) -> LoopElement:
        out: dict = {}
        for (n, lab), c in x.coeffs.items():
            for lab2, d in new_theta[lab].coeffs.items():
                _accumulate(out, (-n, lab2), c * d)
        return LoopElement(spec, out)

    basis = [x for _, x in case.basis(bound)]
    images = [phi_loop(x) for x in basis]
    fixed = all(new_theta_loop(y) == y for y in images)
    preserved = all(
        phi_loop(x.bracket(y)) == px.bracket(py)
        for x, px in zip(basis, images)
        for y, py in zip(basis, images)
    )
    involutive = all(apply_linear(new_theta, new_theta[lab]) == E(lab) for lab in spec.labels)
    return {
        "automorphism": True,
        "images_fixed": fixed,
        "brackets_preserved": preserved,
        "target_involutive": involutive,
        "equal_twist": all(new_theta[lab] == case.theta[lab] for lab in spec.labels),
    }


def polarity_rank(p: str) -> int:
    return _POLARITY_RANK[p]


def format_element(x: LoopElement | LieElement) -> str:
    return repr(x)


def span_coordinates(target: LieElement, basis: Sequence[LieElement]):
    """Coordinates of target in the span of basis, or None."""
    spec = target.spec
    rows = [[b.coeffs.get(lab, Fraction(0)) for b in basis] for lab in spec.labels]
    rhs = [target.coeffs.get(lab, Fraction(0)) for lab in spec.labels]
    return linalg.solve(rows, rhs)
