"""Named sequences and parsing of ``--seq`` values."""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .errors import InvalidInput
from .recurrence import RecurrenceSequence, make_sequence

ENV_VAR = "RPL_PRESETS"


class SequenceParseError(InvalidInput):
    """A ``--seq`` value is neither a preset name nor ``P,Q,U0,U1``."""


def _parse_params(text: str) -> tuple[int, int, int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise SequenceParseError(f"expected P,Q,U0,U1 (four integers), got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise SequenceParseError(f"non-integer entry in {text!r}") from None


def preset_path() -> Path | None:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else None


def load_presets(path: str | Path | None = None) -> dict[str, tuple[int, int, int, int]]:
    """Read ``name = P,Q,U0,U1`` lines; ``#`` starts a comment."""
    path = path or preset_path()
    if path is None:
        text = resources.files(__package__).joinpath("presets.txt").read_text()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise SequenceParseError(f"cannot read preset file {path}: {exc}") from None
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, rhs = line.partition("=")
        if not sep or not name.strip():
            raise SequenceParseError(f"preset line {lineno}: expected 'name = P,Q,U0,U1'")
        out[name.strip().lower()] = _parse_params(rhs)
    return out


def parse_sequence(spec: str, presets: dict | None = None) -> tuple[tuple[int, int, int, int], str | None]:
    """Resolve a preset name or literal to ``(params, name)`` without validating."""
    spec = spec.strip()
    if "," in spec:
        return _parse_params(spec), None
    table = load_presets() if presets is None else presets
    key = spec.lower()
    if key not in table:
        raise SequenceParseError(f"unknown preset {spec!r}; known: {', '.join(sorted(table))}")
    return table[key], key


def resolve_sequence(spec: str, presets: dict | None = None) -> RecurrenceSequence:
    """Parse and validate; raises SequenceParseError or DegenerateSequence."""
    params, name = parse_sequence(spec, presets)
    return make_sequence(*params, name=name)
