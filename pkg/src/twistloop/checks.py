"""Verification suites for the structural identities, driven by the CLI and the tests.

Each suite returns a list of CheckRecord, one per identity family and bound.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial
from typing import Callable, Dict, Iterable, List, Sequence

from . import dynkin, invring, linalg
from .classifier import synthesize_moments
from .combinatorics import Monoid, enumerate_subseqs, word_select
from .enveloping import (
    D_op,
    D_word_op,
    Dtilde_op,
    Dtilde_word_op,
    ai2_congruence_sides,
    ai2_three_term_sides,
    aux_algebra,
    d_elem,
    divided_power,
    dtilde_word,
    mod_pos_product,
    product_rule_defect,
)
from .field import Scalar
from .laurent import LaurentPoly
from .lie import SL2, SL2xSL2, SL3, SL3_NAMED, LoopElement, check_jacobi, get_case
from .representations import (
    TensorModule,
    build_irrep,
    evaluation_module,
    highest_weight_functional,
    k_module,
    simple_quotient_dim,
)


class UnknownSuite(KeyError):
    pass


@dataclass
class CheckRecord:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "pass": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.records: List[CheckRecord] = []

    def family(self, name: str, instances: Iterable, test: Callable[..., bool], star: bool = False) -> bool:
        """Run test on every instance; record the count and the first failure.

        With star, each instance is a tuple of arguments.
        """
        start = time.perf_counter()
        count = 0
        failure = None
        for inst in instances:
            count += 1
            if not (test(*inst) if star else test(inst)):
                failure = inst
                break
        detail = f"{count} instances" if failure is None else f"fails at {failure!r}"
        self.records.append(CheckRecord(self.suite, name, failure is None, detail, time.perf_counter() - start))
        return failure is None

    def single(self, name: str, passed: bool, detail: str = "") -> bool:
        self.records.append(CheckRecord(self.suite, name, bool(passed), detail))
        return bool(passed)


# ---------------------------------------------------------------------------
# Lie structures


def _mat_unit(i: int, j: int) -> List[List[Fraction]]:
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[i][j] = Fraction(1)
    return m


def _mat_comm(a, b):
    ab = linalg.matmul(a, b)
    ba = linalg.matmul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(3)] for i in range(3)]


def sl3_matrix_oracle() -> Dict[str, List[List[Fraction]]]:
    """The 3x3 realization e1 = E12, e2 = E23, h_i = E_ii - E_{i+1,i+1}, X = [e2, e1], Y = [f1, f2]."""
    e1, e2 = _mat_unit(0, 1), _mat_unit(1, 2)
    f1, f2 = _mat_unit(1, 0), _mat_unit(2, 1)
    h1 = [[Fraction(1), 0, 0], [0, Fraction(-1), 0], [0, 0, 0]]
    h2 = [[0, 0, 0], [0, Fraction(1), 0], [0, 0, Fraction(-1)]]
    mats = {"e1": e1, "e2": e2, "f1": f1, "f2": f2, "h1": h1, "h2": h2}
    mats["X"] = _mat_comm(e2, e1)
    mats["Y"] = _mat_comm(f1, f2)
    return {k: [[Fraction(x) for x in row] for row in v] for k, v in mats.items()}


def _sl3_table_matches() -> List[tuple]:
    mats = sl3_matrix_oracle()
    labels = list(SL3.labels)
    columns = [[mats[lab][i][j] for lab in labels] for i in range(3) for j in range(3)]
    bad = []
    for a, b in product(labels, repeat=2):
        target = _mat_comm(mats[a], mats[b])
        coords = linalg.solve(columns, [target[i][j] for i in range(3) for j in range(3)])
        table = SL3.bracket_labels(a, b)
        expected = {lab: c for lab, c in zip(labels, coords) if c} if coords is not None else None
        if expected is None or {k: v for k, v in table.items() if v} != expected:
            bad.append((a, b))
    return bad


def _mul_table_instances(case: str, bound: int):
    if case == "DeltaA1":
        idx = list(range(-bound, bound + 1))
    elif case == "A1":
        idx = list(range(bound + 1))
    else:
        idx = [(a, b) for a in range(bound + 1) for b in range(bound + 1)]
    return idx


def _mul_table_holds(case: str, i, j) -> bool:
    c = get_case(case)
    add = c.monoid.add
    x, y, w = (lambda k, f=f: c.element(f, k) for f in ("x", "y", "w"))
    s = add(i, j)
    zero = LoopElement(c.spec)
    return (
        x(i).bracket(x(j)) == zero
        and y(i).bracket(y(j)) == zero
        and w(i).bracket(w(j)) == zero
        and x(i).bracket(y(j)) == w(s)
        and w(i).bracket(x(j)) == x(s) * 2
        and w(i).bracket(y(j)) == y(s) * -2
    )


def _ad_power(x, y, r: int):
    for _ in range(r):
        y = x.bracket(y)
    return y * Fraction(1, factorial(r))


def liestructures_suite(bound: int = 4) -> List[CheckRecord]:
    rec = _Recorder("liestructures")
    for spec in (SL2, SL2xSL2, SL3):
        bad = check_jacobi(spec)
        n = len(spec.labels)
        rec.single(f"Jacobi identity on {spec.name}", not bad, f"{n**3} triples" if not bad else f"fails at {bad[0]}")
    bad = _sl3_table_matches()
    rec.single("sl3 table equals the matrix realization", not bad, f"{len(SL3.labels) ** 2} pairs" if not bad else f"fails at {bad[0]}")
    for case in ("DeltaA1", "A1", "AI1"):
        idx = _mul_table_instances(case, bound)
        rec.family(f"multiplication table {case} (indices <= {bound})", product(idx, idx), lambda i, j, case=case: _mul_table_holds(case, i, j), star=True)
    E, F, H = SL3_NAMED["x+"], SL3_NAMED["y+"] * 2, SL3_NAMED["w+"] * 2
    rec.single(
        "AI2 (x+, 2y+, 2w+) is an sl2-triple",
        E.bracket(F) == H and H.bracket(E) == E * 2 and H.bracket(F) == F * -2,
    )
    zero = SL3.element({})

    def ladder(prefix: str, start: int, top: int, r: int) -> bool:
        target = SL3_NAMED.get(f"{prefix}{start + r}", zero) if start + r <= top else zero
        return _ad_power(SL3_NAMED["x+"], SL3_NAMED[f"{prefix}{start}"], r) == target

    rec.family("ladder x+^(r) u_-1 = u_(r-1)", range(5), lambda r: ladder("u", -1, 1, r))
    rec.family("ladder x+^(r) v_-2 = v_(r-2)", range(5), lambda r: ladder("v", -2, 2, r))
    for case in ("DeltaA1", "A1", "AI1", "AI2"):
        c = get_case(case)
        basis = [x for _, x in c.basis(2)]
        rec.family(f"{case} basis is fixed by the twist", basis, c.is_fixed)
    return rec.records


# ---------------------------------------------------------------------------
# enveloping identities

MONOIDS = (Monoid.INT, Monoid.NAT, Monoid.NAT2)


def _random_element(alg, rng: random.Random, letters: Sequence, max_len: int = 3):
    total = alg.zero()
    for _ in range(rng.randint(1, 2)):
        term = alg.one(rng.choice([1, -1, 2, Fraction(1, 2)]))
        for _ in range(rng.randint(0, max_len)):
            kind = rng.choice("efh")
            term = term * getattr(alg, kind)(rng.choice(letters), rng.randint(0, 2))
        total = total + term
    return total


def _words(letters: Sequence, r: int, limit: int = 1000):
    """All ordered words of length r, or sorted multisets when there are more than limit."""
    if len(letters) ** r <= limit:
        return list(product(letters, repeat=r)), "ordered"
    return list(combinations_with_replacement(letters, r)), "multisets"


def erfr1_rhs(alg, monoid: Monoid, head, word: Sequence):
    """sum_k (-1)^k k! sum_{l in P(r,k)} h_{head+|a_l|, k+1} D~_{a^l}(1)."""
    word = tuple(word)
    total = alg.zero()
    for k in range(len(word) + 1):
        for sub in enumerate_subseqs(len(word), k):
            inside, outside = word_select(word, sub)
            h = alg.h(monoid.add(head, monoid.total(inside)), k + 1)
            total = total + h * dtilde_word(outside, monoid) * ((-1) ** k * factorial(k))
    return total


def _ideal_element(alg, monoid, letters, rng):
    u = _random_element(alg, rng, letters)
    return u * alg.e(rng.choice(letters), rng.randint(0, 2))


def enveloping_suite(rmax: int = 4, letter_bound: int = 2, samples: int = 6, seed: int = 0, d_elements: bool = True) -> List[CheckRecord]:
    rec = _Recorder("enveloping")
    rng = random.Random(seed)
    for monoid in MONOIDS:
        alg = aux_algebra(monoid)
        letters = monoid.letters(letter_bound)
        tag = monoid.value
        zero_letter = monoid.zero

        def pairs():
            for a in letters:
                for _ in range(samples):
                    yield a, _random_element(alg, rng, letters), _random_element(alg, rng, letters)

        rec.family(
            f"D~_a(uv) product rule [{tag}]",
            pairs(),
            lambda a, u, v: Dtilde_op(alg, a, u * v) == u * Dtilde_op(alg, a, v) - D_op(alg, a, u) * v,
            star=True,
        )

        def comm_instances():
            for a, b in product(letters, repeat=2):
                yield a, b, _random_element(alg, rng, letters)

        rec.family(
            f"D~ commutes with e [{tag}]",
            comm_instances(),
            lambda a, b, u: Dtilde_op(alg, a, alg.e(b, 0) * u) == alg.e(b, 0) * Dtilde_op(alg, a, u),
            star=True,
        )

        def expansion_instances():
            for r in range(min(rmax, 2) + 1):
                for word in _words(letters, r, 60)[0]:
                    yield word, _random_element(alg, rng, letters), _random_element(alg, rng, letters)

        def expansion_holds(word, u, v) -> bool:
            r = len(word)
            rhs = alg.zero()
            for k in range(r + 1):
                for sub in enumerate_subseqs(r, k):
                    inside, outside = word_select(word, sub)
                    rhs = rhs + D_word_op(alg, inside, u) * Dtilde_word_op(alg, outside, v) * ((-1) ** k)
            return Dtilde_word_op(alg, word, u * v) == rhs

        rec.family(f"D~_a(uv) product rule iterated over words [{tag}]", expansion_instances(), expansion_holds, star=True)

        def preserve_instances():
            for a in letters:
                for _ in range(samples):
                    yield a, _ideal_element(alg, monoid, letters, rng), dtilde_word(tuple(rng.choice(letters) for _ in range(2)), monoid)

        rec.family(
            f"D~ preserves positive ideal and Cartan part [{tag}]",
            preserve_instances(),
            lambda a, u, w: not Dtilde_op(alg, a, u).reduce_mod_pos() and Dtilde_op(alg, a, w).normal_order().is_cartan(),
            star=True,
        )

        f01 = alg.f(zero_letter, 1)
        fpow = {s: divided_power(f01, s) for s in range(rmax + 2)}
        for r in range(rmax + 1):
            words, mode = _words(letters, r)
            for s in range(r, rmax + 1):

                def er_fs(word, s=s, r=r) -> bool:
                    lhs = alg.one()
                    for a in word:
                        lhs = lhs * alg.e(a, 0)
                    return (lhs * fpow[s]).equiv_pos(Dtilde_word_op(alg, word, fpow[s - r]))

                ok = rec.family(f"e^(r) f^(s) reduction [{tag}] r={r} s={s} ({mode})", words, er_fs)
                if not ok:
                    break

        def symmetric(word) -> bool:
            base = dtilde_word(word, monoid)
            return all(dtilde_word(p, monoid) == base for p in set(permutations(word)))

        sym_words = [w for r in range(rmax + 1) for w in combinations_with_replacement(letters, r) if r <= 3 or monoid is not Monoid.NAT2]
        rec.family(f"D~_word(1) is symmetric in the word [{tag}]", sym_words, symmetric)

        rhs_cache: Dict[tuple, object] = {}

        def rhs(head, tail):
            if (head, tail) not in rhs_cache:
                rhs_cache[(head, tail)] = erfr1_rhs(alg, monoid, head, tail)
            return rhs_cache[(head, tail)]

        for r in range(rmax + 1):
            tails = list(combinations_with_replacement(letters, r))
            fr1 = fpow[r + 1]

            def prop(head, tail) -> bool:
                lhs = mod_pos_product([alg.e(head, 0)] + [alg.e(b, 0) for b in tail] + [fr1])
                return lhs == rhs(head, tail).reduce_mod_pos()

            rec.family(f"e^(r) f^(r+1) closed form [{tag}] r={r}", product(letters, tails), prop, star=True)

            def cor(head, tail) -> bool:
                return dtilde_word((head,) + tail, monoid) == rhs(head, tail).normal_order()

            rec.family(f"D~ ab*pi closed form [{tag}] r={r}", product(letters, tails), cor, star=True)
    if d_elements:
        rec.records += d_element_records(rmax, letter_bound)
    return rec.records


def d_letters(case: str, letter_bound: int) -> List:
    if case == "DeltaA1":
        return Monoid.INT.letters(letter_bound)
    if case == "A1":
        return Monoid.NAT.letters(letter_bound)
    # first coordinate up to the bound, second coordinate odd
    return [(a, b) for a in range(letter_bound + 1) for b in range(1, max(letter_bound, 1) + 1, 2)]


def d_element_records(rmax: int = 4, letter_bound: int = 2, ai2_rmax: int = 2) -> List[CheckRecord]:
    rec = _Recorder("enveloping")
    for case in ("DeltaA1", "A1", "AI1"):
        letters = d_letters(case, letter_bound)
        for r in range(rmax + 1):
            words, mode = _words(letters, r)
            rec.family(
                f"d-element coherence {case} r={r} ({mode})",
                words,
                lambda word, case=case: d_elem(case, word, "operator") == d_elem(case, word, "recursion"),
            )
        for r in range(min(rmax, 3)):
            words, mode = _words(letters, r, 200)
            rec.family(
                f"d-element product rule {case} r={r + 1}",
                product(letters, words),
                lambda c, word, case=case: not product_rule_defect(case, c, word),
                star=True,
            )
    ai2_letters = [(a, b) for a in range(2) for b in range(2)]
    odd_letters = [(a, b) for a in range(letter_bound + 1) for b in (1, 3)]
    for r in range(ai2_rmax + 1):
        words = list(combinations_with_replacement(odd_letters, r))
        rec.family(
            f"AI2 congruence 2^r x^(2r) Y... = d_word r={r}",
            words,
            lambda word: (lambda s: s[0] == s[1])(ai2_congruence_sides(word)),
        )
        rec.family(
            f"AI2 d_word is symmetric r={r}",
            words,
            lambda word: all(d_elem("AI2", p) == d_elem("AI2", word) for p in set(permutations(word))),
        )
    for r in range(ai2_rmax + 1):
        rec.family(
            f"AI2 three-term congruence for x^(2r+2) v_-2 r={r}",
            product(ai2_letters, combinations_with_replacement(ai2_letters, r)),
            lambda lead, word: (lambda s: s[0] == s[1])(ai2_three_term_sides(lead, word)),
            star=True,
        )
    return rec.records


# ---------------------------------------------------------------------------
# invariant ring


def _set_partitions(items: List[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def _dominant_words(n: int, monoid: Monoid, letters: Sequence, max_len: int) -> List[tuple]:
    nonzero = [x for x in letters if not monoid.is_zero(x)]
    out = []
    for r in range(min(n, max_len) + 1):
        for w in combinations_with_replacement(sorted(nonzero, reverse=True), r):
            out.append(tuple(w))
    return out


def _invring_letters(monoid: Monoid, bound: int) -> List:
    if monoid is Monoid.NAT2:
        return monoid.letters(min(bound, 1))
    return monoid.letters(bound)


def _random_point(monoid: Monoid, rng: random.Random):
    def q(nonzero: bool):
        while True:
            x = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            if x or not nonzero:
                return x

    if monoid is Monoid.NAT2:
        return (Scalar.lift(q(False)), Scalar.lift(q(False)))
    return Scalar.lift(q(monoid is Monoid.INT))


def _canonical_points(pts):
    return sorted(pts)


def invring_suite(n: int = 3, letter_bound: int = 3, max_len: int = 3, samples: int = 5, seed: int = 0) -> List[CheckRecord]:
    rec = _Recorder("invring")
    rng = random.Random(seed)
    for monoid in MONOIDS:
        tag = monoid.value
        letters = _invring_letters(monoid, letter_bound)
        mdense = invring.m_expand_dense
        for size in range(1, n + 1):
            label = f"[{tag}] n={size}"
            one = invring.DensePoly(size, monoid, {tuple([monoid.zero] * size): 1})
            rec.single(f"m_() = 1 {label}", mdense((), size, monoid) == one)
            rec.single(f"m_0 = n {label}", mdense((monoid.zero,), size, monoid) == one * size)
            long_words = list(product(letters, repeat=size + 1))[:50]
            rec.family(f"m_word = 0 for r > n {label}", long_words, lambda w, s=size: not mdense(w, s, monoid).coeffs)
            words = [w for r in range(max_len + 1) for w in product(letters, repeat=r)]
            rec.family(
                f"m_word permutation invariant {label}",
                [w for w in words if len(w) <= 3],
                lambda w, s=size: all(mdense(p, s, monoid) == mdense(w, s, monoid) for p in set(permutations(w))),
            )

            def item5(a, w, s=size) -> bool:
                lhs = mdense((a,), s, monoid) * mdense(w, s, monoid)
                rhs = mdense((a,) + w, s, monoid)
                for i in range(len(w)):
                    rhs = rhs + mdense(w[:i] + (monoid.add(w[i], a),) + w[i + 1 :], s, monoid)
                return lhs == rhs

            short = [w for w in words if len(w) <= max_len - 1]
            rec.family(f"product rule m_a m_word {label}", product(letters, short), item5, star=True)

            def item6(w, s=size) -> bool:
                lhs = invring.DensePoly(s, monoid, {tuple([monoid.zero] * s): 1})
                for a in w:
                    lhs = lhs * mdense((a,), s, monoid)
                rhs = invring.DensePoly(s, monoid)
                for part in _set_partitions(list(range(len(w)))):
                    rhs = rhs + mdense(tuple(monoid.total([w[i] for i in block]) for block in part), s, monoid)
                return lhs == rhs

            rec.family(f"power products via set partitions {label}", words, item6)

            dom = _dominant_words(size, monoid, letters, max_len)

            def mul_matches(w1, w2, s=size) -> bool:
                prod = invring.mul_inv(invring.InvPoly.m(w1, s, monoid), invring.InvPoly.m(w2, s, monoid))
                return prod.keys_dominant() and prod.to_dense() == mdense(w1, s, monoid) * mdense(w2, s, monoid)

            rec.family(f"straightened products equal dense products {label}", product(dom, dom), mul_matches, star=True)

            def independent() -> bool:
                polys = [mdense(w, size, monoid) for w in dom]
                keys = sorted({k for p in polys for k in p.coeffs})
                rows = [[p.coeffs.get(k, 0) for p in polys] for k in keys]
                return linalg.rank(rows) == len(polys) if polys else True

            rec.single(f"dominant m_word are linearly independent {label}", independent(), f"{len(dom)} words")

            def straighten_ok(w, s=size) -> bool:
                c, key = invring.straighten(w, s, monoid)
                return invring.InvPoly(s, monoid, {key: c} if c else {}).to_dense() == mdense(w, s, monoid)

            rec.family(f"straightening preserves m_word {label}", words, straighten_ok)

            def round_trip(pts, s=size) -> bool:
                c = {w: invring.eval_m(w, pts, monoid) for w in invring.required_words(s, monoid)}
                if invring.check_relations(c, s, monoid) is not None:
                    return False
                got = invring.solve_points(c, s, monoid)
                return _canonical_points(got) == _canonical_points(pts)

            tuples = [tuple(_random_point(monoid, rng) for _ in range(size)) for _ in range(samples)]
            rec.family(f"solve_points round trip {label}", tuples, round_trip)

    def regrouped(pairs):
        """Split every entry in two and add a cancelling pair; grouped sums are unchanged."""
        out = []
        for x, y in pairs:
            t = Fraction(rng.randint(-3, 3))
            out += [(x, y - t), (x, t)]
        z, c = rng.choice([5, Fraction(1, 3)]), Fraction(rng.randint(1, 3))
        return out + [(z, c), (z, -c)]

    def coincidence(first, second) -> bool:
        xs1, ys1 = [p[0] for p in first], [p[1] for p in first]
        xs2, ys2 = [p[0] for p in second], [p[1] for p in second]
        same_p = all(invring.p_prime(xs1, ys1, k) == invring.p_prime(xs2, ys2, k) for k in range(1, len(first) + len(second) + 1))
        same_groups = invring.grouped_sums(xs1, ys1) == invring.grouped_sums(xs2, ys2)
        return same_p == same_groups

    def pair_lists():
        for _ in range(4 * samples):
            first = [(rng.choice([2, 3, Fraction(1, 2), -1]), Fraction(rng.randint(-3, 3))) for _ in range(rng.randint(1, 4))]
            yield first, regrouped(first)
            yield first, [(rng.choice([2, 3, Fraction(1, 2), -1]), Fraction(rng.randint(-3, 3))) for _ in range(rng.randint(1, 4))]

    rec.family("p' coincidence is equivalent to equal grouped sums", pair_lists(), coincidence, star=True)
    return rec.records


# ---------------------------------------------------------------------------
# representations


def sample_modules() -> Dict[str, TensorModule]:
    return {
        "DeltaA1": TensorModule("DeltaA1", [evaluation_module("sl2xsl2", (1, 0), 2), evaluation_module("sl2xsl2", (0, 1), 3)]),
        "A1": TensorModule("A1", [evaluation_module("sl2", 1, 2), evaluation_module("sl2", 1, 3)]),
        "AI1": TensorModule("AI1", [k_module("AI1", Fraction(1, 3), 1), k_module("AI1", 2, -1), evaluation_module("sl2", 1, 3)]),
        "AI2": TensorModule("AI2", [k_module("AI2", Fraction(1, 2), 1), k_module("AI2", 1, -1), evaluation_module("sl3_fundamental", None, 3)]),
    }


def _functional_matches(case: str, m: TensorModule) -> bool:
    params = {
        "DeltaA1": dict(alphas=[2, Fraction(1, 3)]),
        "A1": dict(alphas=[2, 3]),
        "AI1": dict(alphas=[3], nu1=Fraction(1, 3), nu_minus1=2),
        "AI2": dict(alphas=[3], nu1=Fraction(1, 2), nu_minus1=1),
    }[case]
    got = highest_weight_functional(m, 8)
    want = synthesize_moments(case, 8, **params)
    return all(got.sequences[k] == want.sequences[k] for k in got.sequences)


def repr_suite(bound: int = 4) -> List[CheckRecord]:
    rec = _Recorder("repr")
    for kind, param in (("sl2", 0), ("sl2", 1), ("sl2", 3), ("sl2xsl2", (1, 2)), ("sl3_fundamental", None), ("k_so3", Fraction(3, 2))):
        defects = build_irrep(kind, param).bracket_defects()
        rec.single(f"{kind}({param}) respects brackets", not defects, "" if not defects else f"fails at {defects[0]}")
    for case, m in sample_modules().items():
        v = m.highest_vector()
        positives = [x for _, x in get_case(case).basis(bound, "positive")]
        rec.family(f"{case} positive part annihilates the highest vector (bound {bound})", positives, lambda x, m=m, v=v: not any(m.act(x, v)))
        rec.single(f"{case} functional matches the closed formula (a <= 8)", _functional_matches(case, m))
    quot = simple_quotient_dim(TensorModule("DeltaA1", [evaluation_module("sl2xsl2", (1, 0), 2)]))
    rec.single("simple quotient of DeltaA1 V(1,0)_2 has dimension 2", quot == 2, f"got {quot}")
    same = TensorModule("A1", [evaluation_module("sl2", 1, 2), evaluation_module("sl2", 1, 2)])
    quot = simple_quotient_dim(same)
    rec.single("simple quotient of A1 V(1)_2 (x) V(1)_2 has dimension 3", quot == 3, f"got {quot}")
    return rec.records


# ---------------------------------------------------------------------------
# Dynkin data

# sorted (marks, comarks) multisets from the standard tables; independent of numbering
KNOWN_MARKS = {
    "A_1^(1)": ((1, 1), (1, 1)),
    "A_4^(1)": ((1,) * 5, (1,) * 5),
    "B_4^(1)": ((1, 1, 2, 2, 2), (1, 1, 1, 2, 2)),
    "C_3^(1)": ((1, 1, 2, 2), (1, 1, 1, 1)),
    "D_5^(1)": ((1, 1, 1, 1, 2, 2), (1, 1, 1, 1, 2, 2)),
    "E_6^(1)": ((1, 1, 1, 2, 2, 2, 3), (1, 1, 1, 2, 2, 2, 3)),
    "E_7^(1)": ((1, 1, 2, 2, 2, 3, 3, 4), (1, 1, 2, 2, 2, 3, 3, 4)),
    "E_8^(1)": ((1, 2, 2, 3, 3, 4, 4, 5, 6), (1, 2, 2, 3, 3, 4, 4, 5, 6)),
    "F_4^(1)": ((1, 2, 2, 3, 4), (1, 1, 2, 2, 3)),
    "G_2^(1)": ((1, 2, 3), (1, 1, 2)),
    "A_2^(2)": ((1, 2), (1, 2)),
    "A_4^(2)": ((1, 2, 2), (1, 2, 2)),
    "A_5^(2)": ((1, 1, 1, 2), (1, 1, 2, 2)),
    "D_4^(2)": ((1, 1, 1, 1), (1, 1, 2, 2)),
    "E_6^(2)": ((1, 1, 2, 2, 3), (1, 2, 2, 3, 4)),
}


def _all_diagrams(rank_bound: int):
    seen = {}
    for row in dynkin.template_rows(rank_bound):
        seen[row.diagram.label] = row.diagram
    return list(seen.values())


def dynkin_suite(rank_bound: int = 8) -> List[CheckRecord]:
    rec = _Recorder("dynkin")
    rows = dynkin.template_rows(rank_bound)
    rec.family("r * sum of marks over painted nodes = 2", rows, lambda row: row.mark_sum() == 2)
    rec.family("fixed subalgebra dimension matches the row", rows, lambda row: dynkin.fixed_dimension(row.diagram, row.s_tilde) == row.k_dimension)

    def known(label) -> bool:
        d = dynkin.parse_diagram(label)
        return (tuple(sorted(d.marks)), tuple(sorted(d.comarks))) == KNOWN_MARKS[label]

    rec.family("marks and comarks match the standard tables", sorted(KNOWN_MARKS), known)
    diagrams = _all_diagrams(rank_bound)
    rec.family(
        "comarks equal minus the h0 coefficients",
        [d for d in diagrams if not d.is_a2l_twisted],
        lambda d: tuple(-c for c in dynkin.h0_table(d)) == tuple(
            sum(d.comarks[j] * dynkin.w_vector(d, j)[i] for j in range(1, d.l + 1)) for i in range(d.finite.size)
        ),
    )
    rec.family("w0 relation on non-A_2l^(2) types of rank <= 6", [d for d in diagrams if not d.is_a2l_twisted and d.l <= 6], dynkin.w0_check)
    rec.family("alpha0(h0) = -2", diagrams, lambda d: dynkin.pairing_alpha0_h0(d) == -2)
    rec.family(
        "table rows equal the exhaustive candidates up to symmetry",
        diagrams,
        lambda d: sorted(dynkin.canonical_subset(d, s) for s in dynkin.candidate_subsets(d))
        == sorted(row.key()[1] for row in dynkin.enumerate_rows(rank_bound) if row.diagram.label == d.label),
    )
    return rec.records


# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[..., List[CheckRecord]]] = {
    "liestructures": liestructures_suite,
    "enveloping": enveloping_suite,
    "invring": invring_suite,
    "repr": repr_suite,
    "dynkin": dynkin_suite,
}


def run_suite(name: str, rmax: int = 4, n: int = 3) -> List[CheckRecord]:
    if name == "all":
        return [r for key in SUITES for r in run_suite(key, rmax, n)]
    if name not in SUITES:
        raise UnknownSuite(name)
    if name == "enveloping":
        return enveloping_suite(rmax=rmax)
    if name == "invring":
        return invring_suite(n=n)
    return SUITES[name]()
