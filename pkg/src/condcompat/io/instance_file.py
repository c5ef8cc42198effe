"""Reading and writing instance and joint files.

An instance file is a JSON document::

    {
      "format": 1,
      "name": "example",
      "dims": [2, 3],
      "A": [["1/5", "?", "3/4"], ["4/5", "?", "1/4"]],
      "B": [["1/6", "1/3", "1/2"], ["2/3", "1/6", "1/6"]]
    }

Entries are fraction strings, decimal strings, JSON numbers (all decoded to
exact fractions) or ``"?"`` for an unknown. A joint file carries ``"P"``
instead of (or besides) ``"A"`` and ``"B"``. Positions in error messages are
1-based, e.g. ``A[2][3]``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from jsonschema import Draft7Validator
from jsonschema.exceptions import best_match
from loguru import logger

from condcompat.constants import FILE_FORMAT_VERSION, UNKNOWN_TOKEN
from condcompat.errors import CondCompatError, InstanceParseError
from condcompat.model import (
    ConditionalMatrix,
    JointDistribution,
    Orientation,
    validate,
)

_GRID = {
    "type": "array",
    "minItems": 2,
    "items": {
        "type": "array",
        "minItems": 2,
        "items": {"anyOf": [{"type": "string"}, {"type": "number"}]},
    },
}

INSTANCE_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["format", "dims"],
    "properties": {
        "format": {"const": FILE_FORMAT_VERSION},
        "name": {"type": "string"},
        "seed": {"type": "integer"},
        "dims": {
            "type": "array",
            "items": {"type": "integer", "minimum": 2},
            "minItems": 2,
            "maxItems": 2,
        },
        "A": _GRID,
        "B": _GRID,
        "P": _GRID,
    },
}

_VALIDATOR = Draft7Validator(INSTANCE_SCHEMA)


@dataclass(frozen=True)
class Instance:
    a: ConditionalMatrix
    b: ConditionalMatrix
    name: str | None = None
    seed: int | None = None
    joint: JointDistribution | None = None


def _path(parts: Iterable[Any]) -> str:
    out = ""
    for part in parts:
        out += f"[{part + 1}]" if isinstance(part, int) else ("." if out else "") + part
    return out or "<root>"


def _decode(text: str, source: str) -> dict[str, Any]:
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(exc.msg, source, exc.lineno, exc.colno) from exc
    error = best_match(_VALIDATOR.iter_errors(doc))
    if error is not None:
        raise InstanceParseError(error.message, source, path=_path(error.absolute_path))
    return doc


def _entry(
    value: Any, key: str, i: int, j: int, source: str, allow_unknown: bool
) -> Fraction | None:
    where = f"{key}[{i + 1}][{j + 1}]"
    if isinstance(value, str) and value.strip() == UNKNOWN_TOKEN:
        if not allow_unknown:
            raise InstanceParseError(
                "unknown entry not allowed here", source, path=where
            )
        return None
    if isinstance(value, bool):
        raise InstanceParseError("expected a number", source, path=where)
    try:
        return Fraction(value) if isinstance(value, (str, int)) else value
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceParseError(f"bad entry {value!r}", source, path=where) from exc


def _grid(
    doc: dict[str, Any], key: str, dims: Sequence[int], source: str, allow_unknown: bool
) -> list[list[Fraction | None]]:
    if key not in doc:
        raise InstanceParseError(f"missing {key!r}", source, path=key)
    rows = doc[key]
    i_max, j_max = dims
    if len(rows) != i_max:
        raise InstanceParseError(
            f"{len(rows)} rows but dims say {i_max}", source, path=key
        )
    for i, row in enumerate(rows):
        if len(row) != j_max:
            raise InstanceParseError(
                f"{len(row)} entries but dims say {j_max}",
                source,
                path=f"{key}[{i + 1}]",
            )
    return [
        [_entry(x, key, i, j, source, allow_unknown) for j, x in enumerate(row)]
        for i, row in enumerate(rows)
    ]


def _conditional(
    doc: dict[str, Any], key: str, orientation: Orientation, source: str
) -> ConditionalMatrix:
    grid = _grid(doc, key, doc["dims"], source, True)
    m = ConditionalMatrix.from_rows(orientation, grid)
    violations = validate(m)
    if violations:
        raise InstanceParseError(str(violations[0]), source, path=key)
    return m


def _joint(doc: dict[str, Any], source: str) -> JointDistribution:
    rows = _grid(doc, "P", doc["dims"], source, False)
    try:
        return JointDistribution.from_rows(rows)
    except CondCompatError as exc:
        raise InstanceParseError(str(exc), source, path="P") from exc


def parse_instance(text: str, source: str = "<input>") -> Instance:
    doc = _decode(text, source)
    a = _conditional(doc, "A", Orientation.GIVEN_COLUMN, source)
    b = _conditional(doc, "B", Orientation.GIVEN_ROW, source)
    joint = _joint(doc, source) if "P" in doc else None
    logger.debug(f"Parsed {a.dims[0]}x{a.dims[1]} instance from {source}")
    return Instance(a, b, doc.get("name"), doc.get("seed"), joint)


def parse_joint(text: str, source: str = "<input>") -> JointDistribution:
    doc = _decode(text, source)
    return _joint(doc, source)


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceParseError(exc.strerror or str(exc), str(path)) from exc


def load_instance(path: str | Path) -> Instance:
    return parse_instance(_read(path), str(path))


def load_joint(path: str | Path) -> JointDistribution:
    return parse_joint(_read(path), str(path))


# ----------------------------------------------------------------------
# Writing
# ----------------------------------------------------------------------


def format_entry(value: Fraction | None) -> str:
    return UNKNOWN_TOKEN if value is None else str(value)


def _grid_lines(rows: Sequence[Sequence[Fraction | None]]) -> str:
    body = ",\n".join(
        "    " + json.dumps([format_entry(x) for x in row]) for row in rows
    )
    return "[\n" + body + "\n  ]"


def dump_instance(
    a: ConditionalMatrix,
    b: ConditionalMatrix,
    *,
    name: str | None = None,
    seed: int | None = None,
    joint: JointDistribution | None = None,
) -> str:
    """Render a pair (and optionally its source joint) as an instance file."""
    fields = [f'"format": {FILE_FORMAT_VERSION}']
    if name is not None:
        fields.append(f'"name": {json.dumps(name)}')
    if seed is not None:
        fields.append(f'"seed": {int(seed)}')
    fields.append(f'"dims": [{a.dims[0]}, {a.dims[1]}]')
    fields.append(f'"A": {_grid_lines(a.rows())}')
    fields.append(f'"B": {_grid_lines(b.rows())}')
    if joint is not None:
        fields.append(f'"P": {_grid_lines(joint.entries)}')
    return "{\n  " + ",\n  ".join(fields) + "\n}\n"


def dump_joint(p: JointDistribution, *, name: str | None = None) -> str:
    fields = [f'"format": {FILE_FORMAT_VERSION}']
    if name is not None:
        fields.append(f'"name": {json.dumps(name)}')
    fields.append(f'"dims": [{p.dims[0]}, {p.dims[1]}]')
    fields.append(f'"P": {_grid_lines(p.entries)}')
    return "{\n  " + ",\n  ".join(fields) + "\n}\n"
