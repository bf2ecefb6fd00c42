"""Command-line interface: verification suites, moment synthesis, classification, tables."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from . import checks, dynkin, invring
from .classifier import (
    FINITE,
    INSUFFICIENT,
    NOT_FINITE,
    UNSUPPORTED,
    CaseMismatch,
    classify_case,
    classify_general,
)
from .combinatorics import Monoid
from .field import FieldError, format_scalar, parse_scalar, set_field_d
from .moments import MomentData, SchemaError
from .representations import BadParameter, NotWeightVector, PointMismatch, highest_weight_functional, tensor_from_params
from .roots import UnsupportedField

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BAD_PARAMS = 3
EXIT_NOT_WEIGHT_VECTOR = 4
EXIT_INSUFFICIENT = 5
EXIT_UNSUPPORTED = 6

VERDICT_EXIT = {FINITE: EXIT_OK, NOT_FINITE: EXIT_FAIL, INSUFFICIENT: EXIT_INSUFFICIENT, UNSUPPORTED: EXIT_UNSUPPORTED}
CASES = ("DeltaA1", "A1", "AI1", "AI2")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(obj, path: Optional[str]) -> None:
    text = canonical_json(obj)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _scalar_list(text: Optional[str]) -> List:
    if not text:
        return []
    return [parse_scalar(part.strip()) for part in text.split(",") if part.strip()]


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in checks.SUITES:
        return _fail(EXIT_USAGE, f"unknown suite {args.suite!r}; expected one of {sorted(checks.SUITES) + ['all']}")
    records = checks.run_suite(args.suite, rmax=args.rmax, n=args.n)
    passed = all(r.passed for r in records)
    _emit({"suite": args.suite, "pass": passed, "records": [r.to_json_obj() for r in records]}, args.output)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_evalmod(args) -> int:
    try:
        alphas = _scalar_list(args.alphas)
        nu1 = parse_scalar(args.nu1)
        nu_m1 = parse_scalar(args.nu_minus1)
        if any(not a for a in alphas):
            raise BadParameter("evaluation points must be nonzero")
        if args.amax < 0:
            raise BadParameter("--amax must be nonnegative")
        module = tensor_from_params(args.case, alphas, nu1, nu_m1)
    except (ValueError, FieldError, BadParameter, PointMismatch) as exc:
        return _fail(EXIT_BAD_PARAMS, str(exc))
    try:
        data = highest_weight_functional(module, args.amax)
    except NotWeightVector as exc:
        return _fail(EXIT_NOT_WEIGHT_VECTOR, str(exc))
    _emit(data.to_json_obj(), args.output)
    return EXIT_OK


def _read_json(path: Optional[str]):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc


def _general_nodes(spec) -> tuple:
    if not isinstance(spec, dict):
        raise SchemaError("'general' must be an object")
    for key in ("diagram", "S_tilde", "nodes"):
        if key not in spec:
            raise SchemaError(f"general: missing key {key!r}")
    try:
        diagram = dynkin.parse_diagram(str(spec["diagram"]))
    except ValueError as exc:
        raise SchemaError(f"general.diagram: {exc}") from exc
    s_tilde = spec["S_tilde"]
    if not isinstance(s_tilde, list) or not all(isinstance(j, int) and 0 <= j <= diagram.l for j in s_tilde):
        raise SchemaError(f"general.S_tilde: expected vertex numbers in 0..{diagram.l}")
    if not isinstance(spec["nodes"], dict):
        raise SchemaError("general.nodes must map vertex numbers to moment data")
    nodes: Dict[int, MomentData] = {}
    for key, obj in spec["nodes"].items():
        try:
            j = int(key)
        except ValueError as exc:
            raise SchemaError(f"general.nodes: bad vertex {key!r}") from exc
        if not isinstance(obj, dict):
            raise SchemaError(f"general.nodes.{key} must be an object")
        try:
            nodes[j] = MomentData.from_json_obj({"case": f"node:{j}", **obj})
        except SchemaError as exc:
            raise SchemaError(f"general.nodes.{key}: {exc}") from exc
    return diagram, s_tilde, nodes


def cmd_classify(args) -> int:
    try:
        obj = _read_json(args.input)
        if isinstance(obj, dict) and "general" in obj:
            diagram, s_tilde, nodes = _general_nodes(obj["general"])
            result = classify_general(diagram, s_tilde, nodes, allow_zero_root=args.allow_zero_root)
        else:
            data = MomentData.from_json_obj(obj)
            case = args.case or data.case
            if case not in CASES:
                raise SchemaError(f"case: {case!r} is not one of {list(CASES)}")
            data.case = case
            result = classify_case(case, data, allow_zero_root=args.allow_zero_root, integrality=args.integrality)
    except (SchemaError, CaseMismatch, dynkin.UnknownDiagramRow) as exc:
        return _fail(EXIT_USAGE, f"schema: {exc}")
    except OSError as exc:
        return _fail(EXIT_USAGE, str(exc))
    _emit(result.to_json_obj(), args.output)
    return VERDICT_EXIT[result.verdict]


_MONOIDS = {"Z": Monoid.INT, "N": Monoid.NAT, "N2": Monoid.NAT2}


def _letter(text: str, monoid: Monoid):
    text = text.strip()
    if monoid is Monoid.NAT2:
        a, b = text.strip("()").split(":")
        return (int(a), int(b))
    return int(text)


def _word(text: str, monoid: Monoid) -> tuple:
    return tuple(_letter(x, monoid) for x in text.split(",") if x.strip())


def _word_text(word) -> list:
    return [list(x) if isinstance(x, tuple) else x for x in word]


def cmd_invring(args) -> int:
    monoid = _MONOIDS[args.monoid]
    if args.input:
        try:
            obj = _read_json(args.input)
            if not isinstance(obj, dict) or not isinstance(obj.get("values"), list):
                raise SchemaError("expected {'values': [[word, scalar], ...]}")
            c = {}
            for item in obj["values"]:
                word, value = item
                c[tuple(tuple(x) if isinstance(x, list) else x for x in word)] = parse_scalar(str(value))
        except (SchemaError, ValueError, TypeError) as exc:
            return _fail(EXIT_USAGE, f"schema: {exc}")
        except OSError as exc:
            return _fail(EXIT_USAGE, str(exc))
        try:
            pts = invring.solve_points(c, args.n, monoid)
        except invring.RelationViolated as exc:
            _emit({"status": "relation_violated", "relation": exc.relation, "detail": str(exc)}, args.output)
            return EXIT_FAIL
        except UnsupportedField as exc:
            _emit({"status": "unsupported_field", "detail": str(exc)}, args.output)
            return EXIT_UNSUPPORTED
        points = [[format_scalar(x) for x in p] if isinstance(p, tuple) else format_scalar(p) for p in pts]
        _emit({"status": "ok", "points": points}, args.output)
        return EXIT_OK
    if not args.product:
        return _fail(EXIT_USAGE, "give --product words or --input values")
    try:
        words = [_word(w, monoid) for w in args.product]
        total = invring.InvPoly.one(args.n, monoid)
        for w in words:
            total = invring.mul_inv(total, invring.InvPoly.m(w, args.n, monoid))
    except (ValueError, TypeError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    terms = [{"word": _word_text(w), "coefficient": format_scalar(c)} for w, c in sorted(total.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))]
    _emit({"n": args.n, "monoid": args.monoid, "factors": [_word_text(w) for w in words], "terms": terms}, args.output)
    return EXIT_OK


def cmd_dynkin(args) -> int:
    if args.diagram:
        try:
            d = dynkin.parse_diagram(args.diagram)
        except ValueError as exc:
            return _fail(EXIT_USAGE, str(exc))
        info = {
            "diagram": d.label,
            "cartan": d.cartan,
            "marks": list(d.marks),
            "comarks": list(d.comarks),
            "rows": [row.text() for row in dynkin.enumerate_rows(max(d.l, 1)) if row.diagram.label == d.label],
        }
        if not d.is_a2l_twisted:
            info["h0"] = list(dynkin.h0_table(d))
            info["w0_relation"] = dynkin.w0_check(d)
        _emit(info, args.output)
        return EXIT_OK
    lines = dynkin.dump_table(args.rank_bound)
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistloop", description=__doc__)
    parser.add_argument("--field-d", type=int, default=2, help="squarefree d of the scalar field Q(sqrt d) (default 2)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run an identity verification suite")
    p.add_argument("--suite", required=True, help="enveloping, invring, liestructures, repr, dynkin or all")
    p.add_argument("--rmax", type=int, default=4, help="word length bound for the enveloping suite")
    p.add_argument("--n", type=int, default=3, help="ambient count bound for the invring suite")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("evalmod", help="build a tensor module and write its moment data")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--nu1", default="0")
    p.add_argument("--nu-1", dest="nu_minus1", default="0")
    p.add_argument("--alphas", default="", help="comma-separated exact scalars")
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_evalmod)

    p = sub.add_parser("classify", help="classify moment data")
    p.add_argument("--input", help="moment data JSON (default stdin)")
    p.add_argument("--case", choices=CASES, help="override the case recorded in the input")
    p.add_argument("--allow-zero-root", action="store_true", help="accept root 0 in recurrences")
    p.add_argument("--integrality", type=int, help="AI1: also require this multiple of nu to be an integer")
    p.add_argument("--output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invring", help="products in the m-basis or point recovery")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--monoid", choices=sorted(_MONOIDS), default="N")
    p.add_argument("--product", nargs="+", help="words like 3,1 (use a:b letters for N2)")
    p.add_argument("--input", help="JSON {'values': [[word, scalar], ...]} for point recovery")
    p.add_argument("--output")
    p.set_defaults(func=cmd_invring)

    p = sub.add_parser("dynkin", help="involution table rows or one diagram's data")
    p.add_argument("--rank-bound", type=int, default=8)
    p.add_argument("--diagram", help="label such as A_5^(2)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_dynkin)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        set_field_d(args.field_d)
    except (ValueError, FieldError) as exc:
        return _fail(EXIT_BAD_PARAMS, str(exc))
    try:
        return args.func(args)
    finally:
        set_field_d(2)


if __name__ == "__main__":
    sys.exit(main())
