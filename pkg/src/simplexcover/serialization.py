"""File formats: point CSV/JSON ingestion, JSON reports, sweep CSV.

Scalar policy: exact rationals appear in JSON as "p/q" strings (plain "p"
when the denominator is 1), floats as decimal strings with 17 significant
digits, so both round-trip losslessly.  Python ints pass through as JSON
integers.
"""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .counterexample import TRIANGLE_LABELS, SweepRow
from .errors import InputFormatError
from .geometry import PointSet
from .scalars import ScalarMode, parse_scalar, scalar_to_str


def to_jsonable(obj: Any) -> Any:
    """Recursively convert results (dataclasses, scalars, enums) to JSON types."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (float, Fraction)):
        return scalar_to_str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_report(report: Dict[str, Any]) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2) + "\n"


def parse_points_csv(text: str, mode: ScalarMode) -> PointSet:
    """One point per line, comma-separated; "p/q" and decimal entries accepted."""
    rows: List[tuple] = []
    dim = None
    for lineno, fields in enumerate(csv.reader(text.splitlines()), start=1):
        fields = [f.strip() for f in fields]
        if not fields or fields == [""]:
            continue
        if dim is None:
            dim = len(fields)
        elif len(fields) != dim:
            raise InputFormatError(
                f"line {lineno}: expected {dim} coordinates, got {len(fields)}"
            )
        try:
            rows.append(tuple(parse_scalar(f, mode) for f in fields))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise InputFormatError("no points found")
    return PointSet(dim, tuple(rows))


def parse_points_json(text: str, mode: ScalarMode) -> PointSet:
    """{"dim": d, "points": [[...], ...]}; entries may be numbers or strings."""
    try:
        data = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "dim" not in data or "points" not in data:
        raise InputFormatError('expected an object with "dim" and "points"')
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputFormatError('"dim" must be a positive integer')
    pts = []
    for i, row in enumerate(data["points"]):
        if not isinstance(row, list) or len(row) != dim:
            raise InputFormatError(f"point {i}: expected {dim} coordinates")
        coords = []
        for v in row:
            if isinstance(v, str):
                try:
                    coords.append(parse_scalar(v, mode))
                except (ValueError, ZeroDivisionError) as exc:
                    raise InputFormatError(f"point {i}: {exc}") from exc
            elif isinstance(v, bool) or not isinstance(v, int):
                raise InputFormatError(f"point {i}: unsupported entry {v!r}")
            else:
                coords.append(Fraction(v) if mode is ScalarMode.EXACT else float(v))
        pts.append(tuple(coords))
    if not pts:
        raise InputFormatError("no points found")
    return PointSet(dim, tuple(pts))


def parse_points_file(path: str, fmt: str, mode: ScalarMode) -> PointSet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    if fmt == "json" or (fmt == "auto" and path.endswith(".json")):
        return parse_points_json(text, mode)
    return parse_points_csv(text, mode)


def points_to_csv(x: PointSet) -> str:
    return "\n".join(",".join(scalar_to_str(c) for c in p) for p in x.points) + "\n"


def points_to_json(x: PointSet) -> str:
    return dumps_report(
        {"dim": x.dim, "points": [[scalar_to_str(c) for c in p] for p in x.points]}
    )


SWEEP_COLUMNS = (
    ["epsilon", "delta", "feasible"]
    + [f"lambda_{label}" for label in TRIANGLE_LABELS]
    + ["lambda_min"]
)


def sweep_rows_to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for r in rows:
        w.writerow(
            [scalar_to_str(r.epsilon), scalar_to_str(r.delta),
             "true" if r.feasible else "false"]
            + [scalar_to_str(r.lambdas[label]) for label in TRIANGLE_LABELS]
            + [scalar_to_str(r.lambda_min)]
        )
    return buf.getvalue()
