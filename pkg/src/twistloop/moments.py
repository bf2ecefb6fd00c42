"""Highest-weight functionals recorded as finite sequences of values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List

from .field import Scalar, format_scalar, parse_scalar


class SchemaError(ValueError):
    pass


@dataclass
class MomentData:
    """Values phi(family element a) for a = offset, offset + 1, ... per named sequence.

    Sequences default to offset 0; the two-sided DeltaA1 sequence "w" starts at -a_max.
    """

    case: str
    a_max: int
    sequences: Dict[str, List[Scalar]] = field(default_factory=dict)
    offsets: Dict[str, int] = field(default_factory=dict)

    def offset(self, name: str) -> int:
        return self.offsets.get(name, 0)

    def value(self, name: str, a: int) -> Scalar:
        return self.sequences[name][a - self.offset(name)]

    def to_json_obj(self) -> dict:
        obj = {
            "case": self.case,
            "a_max": self.a_max,
            "sequences": {k: [format_scalar(x) for x in v] for k, v in self.sequences.items()},
        }
        if self.offsets:
            obj["offsets"] = dict(self.offsets)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    @classmethod
    def from_json_obj(cls, obj) -> "MomentData":
        if not isinstance(obj, dict):
            raise SchemaError("moment data must be a JSON object")
        for key in ("case", "sequences"):
            if key not in obj:
                raise SchemaError(f"missing key {key!r}")
        seqs = obj["sequences"]
        if not isinstance(seqs, dict) or not all(isinstance(v, list) for v in seqs.values()):
            raise SchemaError("'sequences' must map names to lists")
        try:
            parsed = {k: [parse_scalar(x) if isinstance(x, str) else Scalar.lift(_int(x)) for x in v] for k, v in seqs.items()}
        except (ValueError, TypeError) as exc:
            raise SchemaError(str(exc)) from exc
        offsets = obj.get("offsets", {})
        if not isinstance(offsets, dict) or not all(isinstance(v, int) for v in offsets.values()):
            raise SchemaError("'offsets' must map names to integers")
        a_max = obj.get("a_max")
        if a_max is None:
            a_max = max((len(v) - 1 for v in parsed.values()), default=0)
        if not isinstance(a_max, int) or a_max < 0:
            raise SchemaError("'a_max' must be a nonnegative integer")
        return cls(str(obj["case"]), a_max, parsed, dict(offsets))

    @classmethod
    def from_json(cls, text: str) -> "MomentData":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def _int(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"sequence entries must be scalar strings or integers, got {x!r}")
    return x
