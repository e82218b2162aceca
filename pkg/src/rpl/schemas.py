"""JSON Schema documents (draft 2020-12) for every v1 command output.

Plain data only; validation is left to any JSON Schema implementation.
"""
from __future__ import annotations

_INT_STR = {"type": "string", "pattern": r"^-?[0-9]+$"}
_NAT_STR = {"type": "string", "pattern": r"^[0-9]+$"}
_DEC_STR = {"type": "string", "pattern": r"^-?[0-9]\.[0-9]+E[+-][0-9]+$"}
_INDEX = {"type": "integer", "minimum": 0}


def _obj(props: dict, required: list[str] | None = None) -> dict:
    return {"type": "object", "properties": props,
            "required": list(props) if required is None else required,
            "additionalProperties": False}


_SEQUENCE = _obj({"name": {"type": ["string", "null"]}, "P": _INT_STR, "Q": _INT_STR,
                  "U0": _INT_STR, "U1": _INT_STR})

_SOLUTION = _obj({"n": _INDEX, "m": _INDEX, "x": _NAT_STR, "q": {"type": "integer", "minimum": 2},
                  "value": _NAT_STR, "certified_complete": {"type": "boolean"}})

_TRIPLE = _obj({"seq": {"type": "string"}, "n": _INDEX, "m": _INDEX, "A": _INT_STR,
                "B": _INT_STR, "C": _INT_STR, "d": _NAT_STR, "residual_gcd": _NAT_STR,
                "reduced": {"type": "boolean"}, "rad": _NAT_STR, "quality": {"type": "number"},
                "complete_factorization": {"type": "boolean"}})

_TRACE_STEP = _obj({"name": {"type": "string"}, "formula": {"type": "string"}, "lo": _DEC_STR,
                    "hi": _DEC_STR, "precision_bits": {"type": "integer", "minimum": 1}})


def _doc(command: str | list[str], props: dict, with_seq: bool = True) -> dict:
    head = {"schema": {"const": "v1"},
            "command": {"enum": [command] if isinstance(command, str) else command}}
    if with_seq:
        head["sequence"] = _SEQUENCE
    s = _obj({**head, **props})
    s["$schema"] = "https://json-schema.org/draft/2020-12/schema"
    return s


SCHEMAS = {
    "bound": _doc("bound", {"x": _NAT_STR, "N": _NAT_STR, "n0": _NAT_STR,
                            "precision_bits": {"type": "integer", "minimum": 1},
                            "trace": {"type": "array", "items": _TRACE_STEP, "minItems": 1}}),
    "solve": _doc(["solve", "search"], {
        "mode": {"enum": ["fixed-x", "unconstrained"]},
        "x": {"oneOf": [_NAT_STR, {"type": "null"}]},
        "n_bound_used": _NAT_STR,
        "theorem_bound": {"oneOf": [_NAT_STR, {"type": "null"}]},
        "certified_complete": {"type": "boolean"},
        "solutions": {"type": "array", "items": _SOLUTION}}),
    "abc": _doc("abc", {"xy": _obj({"n": _INDEX, "m": _INDEX, "X": _INT_STR, "S": _INT_STR,
                                    "Y": _INT_STR, "d": _NAT_STR}),
                        "triple": _TRIPLE}),
    "abc-scan": _doc("abc-scan", {
        "n_max": {"type": "integer"}, "pairs_scanned": _INDEX,
        "zero_pairs": {"type": "array", "items": {"type": "array", "items": _INDEX,
                                                  "minItems": 2, "maxItems": 2}},
        "incomplete": _INDEX, "note": {"type": "string"},
        "epsilon": {"type": ["number", "null"]}, "exceeding": {"oneOf": [_INDEX, {"type": "null"}]},
        "triples": {"type": "array", "items": _TRIPLE}}),
    "family": _doc("family", {
        "P": _INT_STR, "Q": _INT_STR, "k_max": {"type": "integer", "minimum": 1},
        "members": {"type": "array", "items": _obj({
            "k": {"type": "integer", "minimum": 1}, "solution": _SOLUTION,
            "verified": {"type": "boolean"},
            "exceptional_condition": {"enum": ["holds", "fails"]}})}},
        with_seq=False),
    "check": _doc("check", {
        "params": {"type": "array", "items": _INT_STR, "minItems": 4, "maxItems": 4},
        "ok": {"type": "boolean"},
        "checks": {"type": "array", "items": _obj({"name": {"type": "string"},
                                                    "passed": {"type": "boolean"},
                                                    "detail": {"type": "string"}})}},
        with_seq=False),
}
SCHEMAS["search"] = SCHEMAS["solve"]


def schema_for(command: str) -> dict:
    return SCHEMAS[command]
