"""Versioned JSON documents for every command, plus CSV and text renderers.

Integers that can grow without bound (terms, bases, bounds, triple entries)
are written as decimal strings; indices, exponents and counts stay JSON
numbers. ``decode`` rebuilds typed objects and ``encode`` of the result
reproduces the original document exactly.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .abclab import AbcTriple, QualityReport, XYRecord
from .bounds import EffectiveBounds, TraceStep
from .interval import RInterval
from .recurrence import Check, RecurrenceSequence, ValidationReport, make_sequence
from .solver import FamilyMember, Solution, SolutionSet

SCHEMA_VERSION = "v1"


@dataclass(frozen=True)
class BoundReport:
    sequence: RecurrenceSequence
    x: int
    N: int
    bounds: EffectiveBounds


@dataclass(frozen=True)
class AbcReport:
    sequence: RecurrenceSequence
    xy: XYRecord
    triple: AbcTriple


@dataclass(frozen=True)
class FamilyReport:
    P: int
    Q: int
    k_max: int
    members: list[FamilyMember]


# sequences

def _seq_doc(seq: RecurrenceSequence) -> dict:
    return {"name": seq.name, "P": str(seq.P), "Q": str(seq.Q),
            "U0": str(seq.U0), "U1": str(seq.U1)}


def _seq_from(doc: dict) -> RecurrenceSequence:
    return make_sequence(int(doc["P"]), int(doc["Q"]), int(doc["U0"]), int(doc["U1"]),
                         name=doc["name"])


def _header(command: str, seq: RecurrenceSequence | None) -> dict:
    out = {"schema": SCHEMA_VERSION, "command": command}
    if seq is not None:
        out["sequence"] = _seq_doc(seq)
    return out


# encoders

def _step_doc(step: TraceStep) -> dict:
    return step.to_json()


def _solution_doc(s: Solution) -> dict:
    return {"n": s.n, "m": s.m, "x": str(s.x), "q": s.q, "value": str(s.value),
            "certified_complete": s.certified_complete}


def _xy_doc(r: XYRecord) -> dict:
    return {"n": r.n, "m": r.m, "X": str(r.X), "S": str(r.S), "Y": str(r.Y), "d": str(r.d)}


def _triple_doc(t: AbcTriple, seq: RecurrenceSequence) -> dict:
    return {"seq": seq.describe(), "n": t.n, "m": t.m, "A": str(t.A), "B": str(t.B),
            "C": str(t.C), "d": str(t.d), "residual_gcd": str(t.residual_gcd),
            "reduced": t.reduced, "rad": str(t.rad), "quality": t.quality,
            "complete_factorization": t.complete_factorization}


def encode(obj) -> dict:
    """The v1 JSON document (as a dict) for a command result."""
    if isinstance(obj, BoundReport):
        doc = _header("bound", obj.sequence)
        doc.update(x=str(obj.x), N=str(obj.N), n0=str(obj.bounds.n0),
                   precision_bits=obj.bounds.precision_bits,
                   trace=[_step_doc(s) for s in obj.bounds.trace])
        return doc
    if isinstance(obj, SolutionSet):
        doc = _header("solve" if obj.mode == "fixed-x" else "search", obj.sequence)
        doc.update(mode=obj.mode, x=None if obj.x is None else str(obj.x),
                   n_bound_used=str(obj.n_bound_used),
                   theorem_bound=None if obj.theorem_bound is None else str(obj.theorem_bound),
                   certified_complete=obj.certified_complete,
                   solutions=[_solution_doc(s) for s in obj.solutions])
        return doc
    if isinstance(obj, AbcReport):
        doc = _header("abc", obj.sequence)
        doc.update(xy=_xy_doc(obj.xy), triple=_triple_doc(obj.triple, obj.sequence))
        return doc
    if isinstance(obj, QualityReport):
        doc = _header("abc-scan", obj.sequence)
        doc.update(n_max=obj.n_max, pairs_scanned=obj.pairs_scanned,
                   zero_pairs=[list(z) for z in obj.zero_pairs], incomplete=obj.incomplete,
                   note=obj.note, epsilon=obj.epsilon, exceeding=obj.exceeding,
                   triples=[_triple_doc(t, obj.sequence) for t in obj.triples])
        return doc
    if isinstance(obj, FamilyReport):
        doc = _header("family", None)
        doc.update(P=str(obj.P), Q=str(obj.Q), k_max=obj.k_max,
                   members=[{"k": f.k, "solution": _solution_doc(f.solution),
                             "verified": f.verified,
                             "exceptional_condition": f.exceptional_condition}
                            for f in obj.members])
        return doc
    if isinstance(obj, ValidationReport):
        doc = _header("check", None)
        doc.update(params=[str(p) for p in obj.params], ok=obj.ok,
                   checks=[{"name": c.name, "passed": c.passed, "detail": c.detail}
                           for c in obj.checks])
        return doc
    raise TypeError(f"no encoder for {type(obj).__name__}")


# decoders

def _interval_from(doc: dict) -> RInterval:
    return RInterval(Fraction(doc["lo"]), Fraction(doc["hi"]), doc["precision_bits"])


def _solution_from(doc: dict) -> Solution:
    return Solution(doc["n"], doc["m"], int(doc["x"]), doc["q"], int(doc["value"]),
                    doc["certified_complete"])


def _triple_from(doc: dict) -> AbcTriple:
    return AbcTriple(doc["n"], doc["m"], int(doc["A"]), int(doc["B"]), int(doc["C"]),
                     int(doc["d"]), int(doc["residual_gcd"]), doc["reduced"], int(doc["rad"]),
                     doc["quality"], doc["complete_factorization"])


def _bounds_from(doc: dict) -> EffectiveBounds:
    steps = tuple(TraceStep(s["name"], s["formula"], _interval_from(s)) for s in doc["trace"])
    by_name = {s.name: s.interval for s in steps}
    return EffectiveBounds(c0=by_name["c0"], c1=by_name["c1"], d1=by_name["d1"],
                           d2=by_name["d2"], c4=by_name["c4"], c2=by_name["c2"],
                           C1=by_name["C1"], C2=by_name["C2"], trace=steps,
                           precision_bits=doc["precision_bits"], n0=int(doc["n0"]))


def decode(doc: dict):
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    command = doc["command"]
    if command == "bound":
        return BoundReport(_seq_from(doc["sequence"]), int(doc["x"]), int(doc["N"]),
                           _bounds_from(doc))
    if command in ("solve", "search"):
        tb = doc["theorem_bound"]
        return SolutionSet(_seq_from(doc["sequence"]), doc["mode"], int(doc["n_bound_used"]),
                           None if tb is None else int(tb),
                           [_solution_from(s) for s in doc["solutions"]],
                           x=None if doc["x"] is None else int(doc["x"]))
    if command == "abc":
        xy = doc["xy"]
        rec = XYRecord(xy["n"], xy["m"], int(xy["X"]), int(xy["S"]), int(xy["Y"]), int(xy["d"]))
        return AbcReport(_seq_from(doc["sequence"]), rec, _triple_from(doc["triple"]))
    if command == "abc-scan":
        return QualityReport(_seq_from(doc["sequence"]), doc["n_max"],
                             [_triple_from(t) for t in doc["triples"]], doc["pairs_scanned"],
                             [tuple(z) for z in doc["zero_pairs"]], doc["incomplete"],
                             doc["note"], doc["epsilon"], doc["exceeding"])
    if command == "family":
        members = [FamilyMember(f["k"], _solution_from(f["solution"]), f["verified"],
                                f["exceptional_condition"]) for f in doc["members"]]
        return FamilyReport(int(doc["P"]), int(doc["Q"]), doc["k_max"], members)
    if command == "check":
        checks = [Check(c["name"], c["passed"], c["detail"]) for c in doc["checks"]]
        return ValidationReport(tuple(int(p) for p in doc["params"]), checks)
    raise ValueError(f"unknown command {command!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def loads(text: str):
    return decode(json.loads(text))


# tabular and text views

def _rows(doc: dict) -> tuple[list[str], list[list]]:
    cmd = doc["command"]
    if cmd == "bound":
        rows = [[s["name"], s["formula"], s["lo"], s["hi"], s["precision_bits"]]
                for s in doc["trace"]]
        rows.append(["N", "search bound", doc["N"], doc["N"], doc["precision_bits"]])
        return ["name", "formula", "lo", "hi", "precision_bits"], rows
    if cmd in ("solve", "search"):
        return (["n", "m", "x", "q", "value", "certified_complete"],
                [[s["n"], s["m"], s["x"], s["q"], s["value"], s["certified_complete"]]
                 for s in doc["solutions"]])
    triple_cols = ["seq", "n", "m", "A", "B", "C", "d", "residual_gcd", "rad", "quality",
                   "complete_factorization"]
    if cmd == "abc":
        return triple_cols, [[doc["triple"][c] for c in triple_cols]]
    if cmd == "abc-scan":
        return triple_cols, [[t[c] for c in triple_cols] for t in doc["triples"]]
    if cmd == "family":
        return (["k", "n", "m", "x", "q", "verified", "exceptional_condition"],
                [[f["k"], f["solution"]["n"], f["solution"]["m"], f["solution"]["x"],
                  f["solution"]["q"], f["verified"], f["exceptional_condition"]]
                 for f in doc["members"]])
    if cmd == "check":
        return ["name", "passed", "detail"], [[c["name"], c["passed"], c["detail"]]
                                              for c in doc["checks"]]
    raise ValueError(f"unknown command {cmd!r}")


def render_csv(doc: dict) -> str:
    header, rows = _rows(doc)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_pretty(doc: dict) -> str:
    cmd = doc["command"]
    lines = [f"[{cmd}]"]
    seq = doc.get("sequence")
    if seq:
        label = f"{seq['name']} " if seq["name"] else ""
        lines.append(f"sequence: {label}(P={seq['P']}, Q={seq['Q']}, U0={seq['U0']}, U1={seq['U1']})")
    if cmd == "bound":
        width = max(len(s["name"]) for s in doc["trace"])
        for s in doc["trace"]:
            lines.append(f"  {s['name']:<{width}}  [{_short(s['lo'])}, {_short(s['hi'])}]  "
                         f"{s['formula']}")
        lines.append(f"x = {doc['x']}: every solution has n <= N = {doc['N']}")
    elif cmd in ("solve", "search"):
        if doc["mode"] == "fixed-x":
            status = "complete" if doc["certified_complete"] else "CAPPED (not certified complete)"
            lines.append(f"x = {doc['x']}, scanned n <= {doc['n_bound_used']}, "
                         f"theorem bound N = {doc['theorem_bound']}: {status}")
        else:
            lines.append(f"scanned n <= {doc['n_bound_used']} (empirical, no completeness claim)")
        lines.append(f"{len(doc['solutions'])} solution(s)")
        for s in doc["solutions"]:
            lines.append(f"  U_{s['n']} + U_{s['m']} = {s['x']}^{s['q']} = {s['value']}")
    elif cmd == "abc":
        xy, t = doc["xy"], doc["triple"]
        lines.append(f"(n, m) = ({xy['n']}, {xy['m']}): X = {xy['X']}, S = {xy['S']}, "
                     f"Y = {xy['Y']}, d = {xy['d']}")
        lines.append(_triple_line(t))
    elif cmd == "abc-scan":
        lines.append(f"note: {doc['note']}")
        lines.append(f"pairs scanned: {doc['pairs_scanned']}, zero pairs: {len(doc['zero_pairs'])}, "
                     f"incomplete factorizations: {doc['incomplete']}")
        if doc["epsilon"] is not None:
            lines.append(f"quality > 1 + {doc['epsilon']}: {doc['exceeding']} triple(s)")
        lines.extend(_triple_line(t) for t in doc["triples"])
    elif cmd == "family":
        lines.append(f"P = {doc['P']}, Q = {doc['Q']}")
        for f in doc["members"]:
            s = f["solution"]
            tag = "verified" if f["verified"] else "NOT VERIFIED"
            lines.append(f"  k={f['k']}: U_{s['n']} + U_{s['m']} = {s['x']}^2  {tag}, "
                         f"exceptional condition {f['exceptional_condition']}")
    elif cmd == "check":
        lines.append(f"params: {', '.join(doc['params'])}  ->  {'ok' if doc['ok'] else 'DEGENERATE'}")
        for c in doc["checks"]:
            lines.append(f"  [{'pass' if c['passed'] else 'FAIL'}] {c['name']}: {c['detail']}")
    return "\n".join(lines) + "\n"


def _short(text: str) -> str:
    v = Decimal(text)
    return "0" if v.is_zero() else f"{v:.15g}"


def _triple_line(t: dict) -> str:
    partial = "" if t["complete_factorization"] else " (rad upper bound; quality is a lower bound)"
    return (f"  ({t['n']}, {t['m']}): {t['A']} + {t['B']} = {t['C']}, rad = {t['rad']}, "
            f"quality = {t['quality']:.6f}{partial}")


def render_jsonl(doc: dict) -> str:
    """One solution per line for solve/search; one compact line otherwise."""
    if doc["command"] in ("solve", "search"):
        return "".join(json.dumps(s) + "\n" for s in doc["solutions"])
    return json.dumps(doc) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(doc) + "\n"
    if fmt == "jsonl":
        return render_jsonl(doc)
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "pretty":
        return render_pretty(doc)
    raise ValueError(f"unknown output format {fmt!r}")
