"""Finite-dimensionality of V(phi) from finitely many values of phi.

Every accepted functional is a finite sum of geometric sequences
s_a = sum_rho c_rho rho^a.  The minimal recurrence is found with exact
Berlekamp-Massey, the characteristic polynomial is factored over
Q(sqrt(d)), and the coefficients are checked against the per-case rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .field import Scalar, format_scalar, parse_scalar, is_half_integer_nonneg, is_integer, sqrt_in_field
from .linalg import solve
from .moments import MomentData
from .roots import UnsupportedField, polynomial_roots

FINITE = "finite_dimensional"
NOT_FINITE = "not_finite_dimensional"
INSUFFICIENT = "insufficient_data"
UNSUPPORTED = "unsupported_field"

OK = "ok"
NON_PURE = "non_pure"


class CaseMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# recurrences


def berlekamp_massey(seq: Sequence) -> Tuple[int, List[Scalar]]:
    """Minimal (L, C) with s_n + C_1 s_{n-1} + ... + C_L s_{n-L} = 0 on the whole window."""
    s = [Scalar.lift(x) for x in seq]
    c: List[Scalar] = [Scalar(1)]
    b: List[Scalar] = [Scalar(1)]
    length, shift, last = 0, 1, Scalar(1)
    for n in range(len(s)):
        disc = s[n]
        for i in range(1, length + 1):
            disc = disc + c[i] * s[n - i]
        if not disc:
            shift += 1
            continue
        factor = disc / last
        new = c + [Scalar(0)] * max(0, len(b) + shift - len(c))
        for i, bi in enumerate(b):
            new[i + shift] = new[i + shift] - factor * bi
        if 2 * length <= n:
            b, last, length, shift = c, disc, n + 1 - length, 1
        else:
            shift += 1
        c = new
    c = (c + [Scalar(0)] * (length + 1))[: length + 1]
    return length, c[1:]


@dataclass
class GeometricDecomposition:
    status: str  # ok, insufficient_data, unsupported_field, non_pure
    terms: List[Tuple[Scalar, Scalar]] = field(default_factory=list)
    order: int = 0
    recurrence: List[Scalar] = field(default_factory=list)
    char_poly: List[Scalar] = field(default_factory=list)  # leading coefficient first
    window: int = 0
    reason: str = ""

    def coefficient(self, root) -> Scalar:
        for r, c in self.terms:
            if r == root:
                return c
        return Scalar(0)

    def roots(self) -> List[Scalar]:
        return [r for r, _ in self.terms]

    def to_json_obj(self) -> dict:
        return {
            "status": self.status,
            "order": self.order,
            "window": self.window,
            "recurrence": [format_scalar(x) for x in self.recurrence],
            "char_poly": [format_scalar(x) for x in self.char_poly],
            "terms": [{"root": format_scalar(r), "coefficient": format_scalar(c)} for r, c in self.terms],
            "reason": self.reason,
        }


def synthesize(terms: Sequence[Tuple[object, object]], a: int) -> Scalar:
    total = Scalar(0)
    for r, c in terms:
        r = Scalar.lift(r)
        total = total + Scalar.lift(c) * (Scalar(1) if a == 0 else r**a)
    return total


def detect_recurrence(seq: Sequence, allow_zero_root: bool = False) -> GeometricDecomposition:
    """Decompose seq as sum_rho c_rho rho^a.

    Needs a window of at least 2L + 2 values for recurrence order L. A repeated
    root makes the decomposition non-pure; so does a root 0 unless
    ``allow_zero_root`` is set, in which case a simple root 0 contributes only
    to a = 0.
    """
    s = [Scalar.lift(x) for x in seq]
    order, rec = berlekamp_massey(s)
    char = [Scalar(1)] + rec
    dec = GeometricDecomposition(INSUFFICIENT, [], order, rec, char, len(s))
    if len(s) < 2 * order + 2:
        dec.reason = f"window {len(s)} < 2*{order}+2"
        broken = prefix_break(s)
        if broken is not None:
            dec.reason += f"; the order-{broken[1]} recurrence confirmed on a < {broken[0]} fails at a = {broken[0]}"
        return dec
    try:
        roots = polynomial_roots(list(reversed(char)))
    except UnsupportedField as exc:
        dec.status, dec.reason = UNSUPPORTED, str(exc)
        return dec
    if len(set(roots)) != len(roots):
        dec.status, dec.reason = NON_PURE, "repeated root"
        return dec
    if any(not r for r in roots) and not allow_zero_root:
        dec.status, dec.reason = NON_PURE, "root 0"
        return dec
    if roots:
        vander = [[Scalar(1) if a == 0 else r**a for r in roots] for a in range(order)]
        coeffs = solve(vander, s[:order])
        if coeffs is None:
            dec.status, dec.reason = NON_PURE, "singular Vandermonde system"
            return dec
        dec.terms = [(r, Scalar.lift(c)) for r, c in zip(roots, coeffs)]
    for a, v in enumerate(s):
        if synthesize(dec.terms, a) != v:
            dec.status, dec.reason = NON_PURE, f"residual at a = {a}"
            return dec
    dec.status = OK
    return dec


def prefix_break(seq: Sequence) -> Optional[Tuple[int, int]]:
    """(p, d) for the longest prefix s_0..s_{p-1} that confirms an order-d recurrence which s_p breaks."""
    s = [Scalar.lift(x) for x in seq]
    for p in range(len(s) - 1, 1, -1):
        d, _ = berlekamp_massey(s[:p])
        if p >= 2 * d + 2:
            return (p, d) if berlekamp_massey(s[: p + 1])[0] > d else None
    return None


# ---------------------------------------------------------------------------
# results


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RootParam:
    """One value beta = alpha + 1/alpha with its multiplicity.

    ``alphas`` is the materialized multiset of alpha (None when alpha is not
    in the field); ``minus`` is the coefficient of beta^a in the minus sequence.
    """

    beta: Scalar
    multiplicity: int
    alphas: Optional[List[Scalar]] = None
    minus: Scalar = field(default_factory=lambda: Scalar(0))

    def to_json_obj(self) -> dict:
        return {
            "beta": format_scalar(self.beta),
            "multiplicity": self.multiplicity,
            "alphas": None if self.alphas is None else [format_scalar(a) for a in self.alphas],
            "minus_coefficient": format_scalar(self.minus),
        }


@dataclass
class ClassificationResult:
    case: str
    verdict: str = FINITE
    nu: Dict[int, Scalar] = field(default_factory=dict)
    roots: List[RootParam] = field(default_factory=list)
    checks: List[Check] = field(default_factory=list)
    decompositions: Dict[str, GeometricDecomposition] = field(default_factory=dict)
    nodes: Dict[int, "ClassificationResult"] = field(default_factory=dict)

    @property
    def finite(self) -> bool:
        return self.verdict == FINITE

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def failed_checks(self) -> List[Check]:
        out = [c for c in self.checks if not c.passed]
        for node in self.nodes.values():
            out += node.failed_checks()
        return out

    def betas(self) -> List[Scalar]:
        """beta multiset, sorted."""
        out: List[Scalar] = []
        for r in self.roots:
            out += [r.beta] * r.multiplicity
        return sorted(out)

    def alphas(self) -> Optional[List[Scalar]]:
        out: List[Scalar] = []
        for r in self.roots:
            if r.alphas is None:
                return None
            out += r.alphas
        return sorted(out)

    def finalize(self) -> "ClassificationResult":
        statuses = [d.status for d in self.decompositions.values()] + [n.verdict for n in self.nodes.values()]
        if INSUFFICIENT in statuses:
            self.verdict = INSUFFICIENT
        elif UNSUPPORTED in statuses:
            self.verdict = UNSUPPORTED
        elif all(c.passed for c in self.checks) and all(n.verdict == FINITE for n in self.nodes.values()):
            self.verdict = FINITE
        else:
            self.verdict = NOT_FINITE
        return self

    def to_json_obj(self) -> dict:
        params = {
            "nu": {str(k): format_scalar(v) for k, v in sorted(self.nu.items(), reverse=True)},
            "roots": [r.to_json_obj() for r in self.roots],
        }
        if self.nodes:
            params["nodes"] = {str(j): n.to_json_obj() for j, n in sorted(self.nodes.items())}
        return {
            "case": self.case,
            "verdict": self.verdict,
            "params": params,
            "certificate": {
                "recurrence": {k: [format_scalar(x) for x in d.recurrence] for k, d in self.decompositions.items()},
                "char_poly": {k: [format_scalar(x) for x in d.char_poly] for k, d in self.decompositions.items()},
                "sequences": {k: d.to_json_obj() for k, d in self.decompositions.items()},
                "checks": [{"name": c.name, "pass": c.passed, "detail": c.detail} for c in self.checks],
            },
        }


# ---------------------------------------------------------------------------
# per-case logic


def materialize_alpha(beta: Scalar) -> Optional[Scalar]:
    """The root of alpha^2 - beta alpha + 1 with |alpha| >= 1, when it lies in the field."""
    beta = Scalar.lift(beta)
    sigma = sqrt_in_field(beta * beta - 4, beta.d if beta.b else None)
    if sigma is None:
        return None
    a1, a2 = (beta + sigma) / 2, (beta - sigma) / 2
    return a1 if abs(a1) >= abs(a2) else a2


def _decompose(result: ClassificationResult, name: str, seq: Sequence, allow_zero_root: bool) -> Optional[GeometricDecomposition]:
    dec = detect_recurrence(seq, allow_zero_root)
    result.decompositions[name] = dec
    if dec.status == INSUFFICIENT:
        result.check(f"{name}: window >= 2*order+2", False, dec.reason)
        return None
    if dec.status == UNSUPPORTED:
        result.check(f"{name}: roots in Q(sqrt d)", False, dec.reason)
        return None
    if not result.check(f"{name}: pure geometric sum", dec.status == OK, dec.reason):
        return None
    return dec


def _single_logic(result: ClassificationResult, seq: Sequence, name: str, nu_roots: bool, nu_rule: str, scale: int, allow_zero_root: bool) -> None:
    """A1 / AI1 style: s_a = [nu_1 2^a + nu_-1 (-2)^a] + sum_i beta_i^a, all divided by ``scale``."""
    dec = _decompose(result, name, seq, allow_zero_root)
    if dec is None:
        return
    for root, coeff in dec.terms:
        coeff = coeff / scale
        if nu_roots and root in (2, -2):
            sign = 1 if root == 2 else -1
            result.nu[sign] = coeff
            if nu_rule == "half":
                result.check(f"nu_{sign} in (1/2)Z>=0", is_half_integer_nonneg(coeff), format_scalar(coeff))
            continue
        ok = is_integer(coeff) and coeff >= 0
        result.check(f"coefficient at beta = {format_scalar(root)} is a nonnegative integer", ok, format_scalar(coeff))
        if ok:
            alpha = materialize_alpha(root)
            k = int(Scalar.lift(coeff).a)
            result.roots.append(RootParam(root, k, None if alpha is None else [alpha] * k))
    if nu_roots:
        result.nu.setdefault(1, Scalar(0))
        result.nu.setdefault(-1, Scalar(0))


def _pair_logic(result: ClassificationResult, plus: Sequence, minus: Sequence, nu_roots: bool, scale: int, allow_zero_root: bool) -> None:
    """DeltaA1 pair / AI2 style.

    plus_a = [nu_1 2^a + nu_-1 (-2)^a] + sum_i beta_i^a and
    minus_a = sum_i beta_i^a (alpha_i - 1/alpha_i), both divided by ``scale``.
    """
    dp = _decompose(result, "plus", plus, allow_zero_root)
    dm = _decompose(result, "minus", minus, allow_zero_root)
    if dp is None or dm is None:
        return
    plus_roots = set(dp.roots())
    extra = [r for r in dm.roots() if r not in plus_roots]
    result.check("minus roots are plus roots", not extra, ", ".join(format_scalar(r) for r in extra))
    for root, coeff in dp.terms:
        coeff = coeff / scale
        m = dm.coefficient(root) / scale
        if nu_roots and root in (2, -2):
            sign = 1 if root == 2 else -1
            result.nu[sign] = coeff
            result.check(f"nu_{sign} in (1/2)Z>=0", is_half_integer_nonneg(coeff), format_scalar(coeff))
            result.check(f"minus coefficient at beta = {format_scalar(root)} vanishes", not m, format_scalar(m))
            continue
        if not result.check(
            f"coefficient at beta = {format_scalar(root)} is a nonnegative integer",
            is_integer(coeff) and coeff >= 0,
            format_scalar(coeff),
        ):
            continue
        k = int(Scalar.lift(coeff).a)
        param = _split_pair(result, root, k, m)
        if param is not None:
            result.roots.append(param)
    if nu_roots:
        result.nu.setdefault(1, Scalar(0))
        result.nu.setdefault(-1, Scalar(0))


def _split_pair(result: ClassificationResult, beta: Scalar, k: int, m: Scalar) -> Optional[RootParam]:
    """Write m = j sigma with sigma^2 = beta^2 - 4, |j| <= k, j = k mod 2; then p = (k+j)/2 copies of alpha."""
    disc = beta * beta - 4
    label = f"minus coefficient at beta = {format_scalar(beta)}"
    if not disc:
        if not result.check(f"{label} vanishes", not m, format_scalar(m)):
            return None
        return RootParam(beta, k, [beta / 2] * k, m)
    if not m:
        if not result.check(f"{label}: j = 0 needs even multiplicity", k % 2 == 0, f"k = {k}"):
            return None
        alpha = materialize_alpha(beta)
        alphas = None if alpha is None else [alpha] * (k // 2) + [1 / alpha] * (k // 2)
        return RootParam(beta, k, alphas, m)
    ratio = m * m / disc
    j = None
    if ratio.is_rational() and ratio.a >= 0:
        root = sqrt_in_field(ratio.a)
        if root is not None and root.is_rational() and is_integer(root):
            j = int(root.a)
    if not result.check(f"{label} = j*sqrt(beta^2-4) with integer j", j is not None, format_scalar(m)):
        return None
    if not result.check(f"{label}: |j| <= k and j = k mod 2", j <= k and (k - j) % 2 == 0, f"j = {j}, k = {k}"):
        return None
    sigma = m / j
    alpha = (beta + sigma) / 2
    p, q = (k + j) // 2, (k - j) // 2
    return RootParam(beta, k, [alpha] * p + [1 / alpha] * q, m)


def _native_logic(result: ClassificationResult, data: MomentData, allow_zero_root: bool) -> None:
    """DeltaA1 two-sided sequence w_a = sum_i alpha_i^a, a in [-m, m]."""
    off = data.offset("w")
    seq = data.sequences["w"]
    nonneg = seq[-off:] if off < 0 else seq
    dec = _decompose(result, "w", nonneg, allow_zero_root=False)
    if dec is None:
        return
    alphas: List[Scalar] = []
    for root, coeff in dec.terms:
        ok = is_integer(coeff) and coeff >= 0
        if result.check(f"coefficient at alpha = {format_scalar(root)} is a nonnegative integer", ok, format_scalar(coeff)):
            alphas += [root] * int(coeff.a)
    negatives = [(a, seq[a - off]) for a in range(off, 0)]
    bad = [a for a, v in negatives if synthesize(dec.terms, a) != v]
    result.check("negative side matches rho^(-a)", not bad, f"mismatch at a = {bad[:1]}" if bad else "")
    groups: Dict[Scalar, List[Scalar]] = {}
    for alpha in alphas:
        groups.setdefault(alpha + 1 / alpha, []).append(alpha)
    for beta, group in sorted(groups.items()):
        minus = sum((a - 1 / a for a in group), Scalar(0))
        result.roots.append(RootParam(beta, len(group), sorted(group), minus))


def _group_value(param: RootParam, a: int) -> Scalar:
    """sum over the group of alpha^a for any integer a."""
    if param.alphas is not None:
        return sum((x**a for x in param.alphas), Scalar(0))
    # alpha outside the field forces j = 0: (k/2)(alpha^a + alpha^-a) = (k/2) V_|a|(beta)
    prev, cur = Scalar(2), Scalar.lift(param.beta)
    n = abs(a)
    if n == 0:
        return Scalar(param.multiplicity)
    for _ in range(n - 1):
        prev, cur = cur, param.beta * cur - prev
    return cur * param.multiplicity / 2


CASE_SEQUENCES = {
    "A1": ("w",),
    "AI1": ("w",),
    "AI2": ("w_plus", "w_minus"),
    "DeltaA1": ("w_plus", "w_minus"),
}


def classify_case(case: str, data: MomentData, allow_zero_root: bool = False, integrality: Optional[int] = None) -> ClassificationResult:
    """Decide finite-dimensionality for one of the four minimal cases.

    ``integrality``: when given for AI1, additionally require integrality * nu_{+-1} in Z.
    """
    if data.case != case:
        raise CaseMismatch(f"data is for {data.case!r}, not {case!r}")
    result = ClassificationResult(case)
    seqs = data.sequences
    if case == "A1":
        _require(seqs, ("w",))
        _single_logic(result, seqs["w"], "w", False, "", 1, allow_zero_root)
    elif case == "AI1":
        _require(seqs, ("w",))
        _single_logic(result, seqs["w"], "w", True, "free", 1, allow_zero_root)
        if integrality is not None:
            for sign in (1, -1):
                v = result.nu.get(sign, Scalar(0)) * integrality
                result.check(f"{integrality}*nu_{sign} is an integer", is_integer(v), format_scalar(v))
    elif case == "AI2":
        _require(seqs, ("w_plus", "w_minus"))
        _pair_logic(result, seqs["w_plus"], seqs["w_minus"], True, 1, allow_zero_root)
    elif case == "DeltaA1":
        if "w_plus" in seqs or "w_minus" in seqs:
            _require(seqs, ("w_plus", "w_minus"))
            _pair_logic(result, seqs["w_plus"], seqs["w_minus"], False, 1, allow_zero_root)
            if "w" in seqs and result.roots and all(c.passed for c in result.checks):
                off = data.offset("w")
                bad = [
                    a
                    for a in range(off, off + len(seqs["w"]))
                    if sum((_group_value(r, a) for r in result.roots), Scalar(0)) != seqs["w"][a - off]
                ]
                result.check("two-sided sequence matches the recovered alphas", not bad, f"mismatch at a = {bad[:1]}" if bad else "")
        elif "w" in seqs:
            _native_logic(result, data, allow_zero_root)
        else:
            raise CaseMismatch("DeltaA1 data needs w_plus/w_minus or w")
    else:
        raise CaseMismatch(f"unknown case {case!r}")
    return result.finalize()


def _require(seqs, names) -> None:
    missing = [n for n in names if n not in seqs]
    if missing:
        raise CaseMismatch(f"missing sequences {missing}")


# ---------------------------------------------------------------------------
# synthesis


def _scalar(x) -> Scalar:
    return parse_scalar(x) if isinstance(x, str) else Scalar.lift(x)


def synthesize_moments(case: str, a_max: int, alphas: Sequence = (), nu1=0, nu_minus1=0) -> MomentData:
    """Moment sequences of the functional with the given parameters, a = 0..a_max.

    DeltaA1 also gets the two-sided sequence "w" over a in [-a_max, a_max].
    """
    alphas = [_scalar(x) for x in alphas]
    nu1, nu_m1 = _scalar(nu1), _scalar(nu_minus1)
    betas = [x + 1 / x for x in alphas]
    rng = range(a_max + 1)

    def plus(a):
        base = sum((b**a for b in betas), Scalar(0))
        if case in ("AI1", "AI2"):
            base = base + nu1 * 2**a + nu_m1 * (-2) ** a
        return base

    def minus(a):
        return sum((b**a * (x - 1 / x) for b, x in zip(betas, alphas)), Scalar(0))

    if case in ("A1", "AI1"):
        return MomentData(case, a_max, {"w": [plus(a) for a in rng]})
    if case == "AI2":
        return MomentData(case, a_max, {"w_plus": [plus(a) for a in rng], "w_minus": [minus(a) for a in rng]})
    if case == "DeltaA1":
        two_sided = [sum((x**a for x in alphas), Scalar(0)) for a in range(-a_max, a_max + 1)]
        return MomentData(
            case,
            a_max,
            {"w_plus": [plus(a) for a in rng], "w_minus": [minus(a) for a in rng], "w": two_sided},
            {"w": -a_max},
        )
    raise CaseMismatch(f"unknown case {case!r}")


# ---------------------------------------------------------------------------
# general diagrams


NODE_CASE_TAG = {"a": "DeltaA1", "b": "A1", "c": "AI1", "d": "AI2"}


def _node_data(case_letter: str, j: int, data: MomentData) -> MomentData:
    seqs = data.sequences
    if "w" not in seqs:
        raise CaseMismatch(f"node {j}: missing sequence 'w'")
    w = seqs["w"]
    if case_letter in ("a", "d"):
        if "w_minus" not in seqs:
            raise CaseMismatch(f"node {j}: missing sequence 'w_minus'")
        minus = seqs["w_minus"]
        if case_letter == "d":
            w = [Scalar.lift(x) / 2 for x in w]
            minus = [Scalar.lift(x) / 2 for x in minus]
        return MomentData(NODE_CASE_TAG[case_letter], data.a_max, {"w_plus": list(w), "w_minus": list(minus)})
    return MomentData(NODE_CASE_TAG[case_letter], data.a_max, {"w": list(w)})


def _check_row(diagram, s_tilde) -> None:
    from .dynkin import UnknownDiagramRow, find_row

    if not s_tilde:
        if diagram.r != 1:
            raise UnknownDiagramRow(f"{diagram.label}: S~ = {{}} is only allowed for untwisted diagrams")
        return
    if find_row(diagram, s_tilde) is None:
        raise UnknownDiagramRow(f"{diagram.label} with S~ = {sorted(s_tilde)} is not a row of the involution table")


def classify_general(diagram, s_tilde, nodes: Dict[int, MomentData], allow_zero_root: bool = False) -> ClassificationResult:
    """Route every vertex j >= 1 to its node case and conjoin the verdicts.

    Node data carries "w" (values on w_{j,a}) and, for a_{j,mu(j)} in {0, -1}, "w_minus".
    """
    from .dynkin import node_case

    s_tilde = frozenset(s_tilde)
    _check_row(diagram, s_tilde)
    result = ClassificationResult(f"general:{diagram.label}")
    missing = [j for j in range(1, diagram.l + 1) if j not in nodes]
    if missing:
        raise CaseMismatch(f"no data for nodes {missing}")
    for j in range(1, diagram.l + 1):
        letter = node_case(diagram, s_tilde, j)
        data = _node_data(letter, j, nodes[j])
        integrality = diagram.comarks[j] if letter == "c" and 0 not in s_tilde else None
        sub = classify_case(data.case, data, allow_zero_root, integrality)
        sub.case = f"node {j} ({letter}: {data.case})"
        result.nodes[j] = sub
    return result.finalize()


def synthesize_general(diagram, s_tilde, params: Dict[int, dict], a_max: int) -> Dict[int, MomentData]:
    """Per-node data for node parameters {j: {"alphas": [...], "nu1": ..., "nu_minus1": ...}}."""
    from .dynkin import node_case

    out: Dict[int, MomentData] = {}
    for j in range(1, diagram.l + 1):
        letter = node_case(diagram, s_tilde, j)
        p = params.get(j, {})
        data = synthesize_moments(NODE_CASE_TAG[letter], a_max, p.get("alphas", ()), p.get("nu1", 0), p.get("nu_minus1", 0))
        seqs = data.sequences
        if letter in ("a", "d"):
            scale = 2 if letter == "d" else 1
            seqs = {"w": [x * scale for x in seqs["w_plus"]], "w_minus": [x * scale for x in seqs["w_minus"]]}
        out[j] = MomentData(f"node:{letter}", a_max, seqs)
    return out
