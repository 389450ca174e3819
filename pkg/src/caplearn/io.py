"""File formats: capacity and system JSON, training CSV/JSON, report JSON.

All writers emit a canonical form (two-space indented JSON, subsets in
ascending mask order, floats in shortest round-trip notation), so saving a
loaded file reproduces it byte for byte.  Readers validate scale membership
at ingestion and reject off-scale values rather than rounding them.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any

from .capacity import Capacity
from .errors import FormatError
from .learning import LearnReport, TrainingSet
from .relational import RelationalSystem, SystemKind
from .scale import DEFAULT_TOLERANCE, Scale, ScaleKind


def _dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"{where}: expected a number, got {value!r}")
    return float(value)


# ---------------------------------------------------------------------------
# scales


def scale_to_json(scale: Scale) -> dict:
    return {
        "kind": scale.kind.value,
        "levels": list(scale.levels) if scale.levels is not None else None,
    }


def scale_from_json(obj: Any, tol: float | None = None) -> Scale:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("scale must be an object with a 'kind' field")
    kind = obj["kind"]
    tol = DEFAULT_TOLERANCE if tol is None else tol
    try:
        if kind == ScaleKind.UNIT_INTERVAL.value:
            return Scale.unit_interval(tol)
        if kind == ScaleKind.FINITE_CHAIN.value:
            levels = obj.get("levels")
            if not isinstance(levels, list):
                raise FormatError("finite chain scale needs a 'levels' array")
            return Scale.finite_chain(
                (_number(v, f"scale level {i}") for i, v in enumerate(levels)), tol
            )
    except FormatError:
        raise
    except Exception as exc:
        raise FormatError(f"invalid scale: {exc}") from exc
    raise FormatError(f"unknown scale kind {kind!r}")


# ---------------------------------------------------------------------------
# capacities


def capacity_to_json(mu: Capacity) -> dict:
    return {"n": mu.n, "scale": scale_to_json(mu.scale), "values": list(mu.values)}


def capacity_from_json(obj: Any, tol: float | None = None) -> Capacity:
    if not isinstance(obj, dict):
        raise FormatError("capacity must be a JSON object")
    for field in ("n", "scale", "values"):
        if field not in obj:
            raise FormatError(f"capacity is missing the '{field}' field")
    if not isinstance(obj["n"], int):
        raise FormatError(f"capacity field 'n' must be an integer, got {obj['n']!r}")
    scale = scale_from_json(obj["scale"], tol)
    values = obj["values"]
    if not isinstance(values, list):
        raise FormatError("capacity field 'values' must be an array")
    try:
        return Capacity(
            obj["n"],
            scale,
            tuple(_number(v, f"value {i}") for i, v in enumerate(values)),
        )
    except FormatError:
        raise
    except Exception as exc:
        raise FormatError(f"invalid capacity: {exc}") from exc


def save_capacity(mu: Capacity, path: str | Path) -> None:
    Path(path).write_text(_dumps(capacity_to_json(mu)))


def load_capacity(path: str | Path, tol: float | None = None) -> Capacity:
    return capacity_from_json(_read_json(path), tol)


# ---------------------------------------------------------------------------
# relational systems


def system_to_json(sys: RelationalSystem) -> dict:
    return {
        "kind": sys.kind.value,
        "matrix": [list(row) for row in sys.matrix],
        "rhs": list(sys.rhs),
        "column_labels": list(sys.column_labels),
        "scale": scale_to_json(sys.scale),
    }


def system_from_json(obj: Any, tol: float | None = None) -> RelationalSystem:
    if not isinstance(obj, dict):
        raise FormatError("system must be a JSON object")
    for field in ("kind", "matrix", "rhs"):
        if field not in obj:
            raise FormatError(f"system is missing the '{field}' field")
    try:
        kind = SystemKind(obj["kind"])
    except ValueError as exc:
        raise FormatError(f"unknown system kind {obj['kind']!r}") from exc
    matrix = obj["matrix"]
    rhs = obj["rhs"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise FormatError("system field 'matrix' must be an array of rows")
    if not isinstance(rhs, list):
        raise FormatError("system field 'rhs' must be an array")
    if "scale" in obj:
        scale = scale_from_json(obj["scale"], tol)
    else:
        scale = Scale.unit_interval(DEFAULT_TOLERANCE if tol is None else tol)
    labels = obj.get("column_labels")
    if labels is None:
        labels = list(range(len(matrix[0]) if matrix else 0))
    if not isinstance(labels, list):
        raise FormatError("system field 'column_labels' must be an array")
    try:
        return RelationalSystem(
            kind,
            tuple(
                tuple(_number(v, f"matrix entry ({k}, {j})") for j, v in enumerate(row))
                for k, row in enumerate(matrix)
            ),
            tuple(_number(v, f"rhs entry {k}") for k, v in enumerate(rhs)),
            tuple(labels),
            scale,
        )
    except FormatError:
        raise
    except Exception as exc:
        raise FormatError(f"invalid system: {exc}") from exc


def save_system(sys: RelationalSystem, path: str | Path) -> None:
    Path(path).write_text(_dumps(system_to_json(sys)))


def load_system(path: str | Path, tol: float | None = None) -> RelationalSystem:
    return system_from_json(_read_json(path), tol)


# ---------------------------------------------------------------------------
# training data


def training_set_to_json(ts: TrainingSet) -> dict:
    return {
        "n": ts.n,
        "scale": scale_to_json(ts.scale),
        "items": [{"x": list(item.x), "alpha": item.alpha} for item in ts.items],
    }


def training_set_from_json(obj: Any, tol: float | None = None) -> TrainingSet:
    if not isinstance(obj, dict):
        raise FormatError("training set must be a JSON object")
    for field in ("n", "scale", "items"):
        if field not in obj:
            raise FormatError(f"training set is missing the '{field}' field")
    if not isinstance(obj["n"], int):
        raise FormatError(f"training set field 'n' must be an integer, got {obj['n']!r}")
    scale = scale_from_json(obj["scale"], tol)
    items = obj["items"]
    if not isinstance(items, list):
        raise FormatError("training set field 'items' must be an array")
    pairs = []
    for k, item in enumerate(items):
        if not isinstance(item, dict) or "x" not in item or "alpha" not in item:
            raise FormatError(f"item {k} must be an object with 'x' and 'alpha'")
        if not isinstance(item["x"], list):
            raise FormatError(f"item {k}: 'x' must be an array")
        coords = tuple(
            _number(v, f"item {k}, coordinate x{i + 1}") for i, v in enumerate(item["x"])
        )
        pairs.append((coords, _number(item["alpha"], f"item {k}, alpha")))
    try:
        return TrainingSet.from_pairs(obj["n"], scale, pairs)
    except Exception as exc:
        raise FormatError(f"invalid training set: {exc}") from exc


def training_set_from_csv_text(
    text: str, scale: Scale | None = None, source: str = "<csv>"
) -> TrainingSet:
    """Parse 'x1,...,xn,alpha' rows; the scale defaults to the unit interval."""
    rows = list(csv.reader(text.splitlines()))
    rows = [row for row in rows if row and any(cell.strip() for cell in row)]
    if not rows:
        raise FormatError(f"{source}: no rows")
    header = [cell.strip().lower() for cell in rows[0]]
    n = len(header) - 1
    expected = [f"x{i + 1}" for i in range(n)] + ["alpha"]
    if n < 1 or header != expected:
        raise FormatError(
            f"{source}: header must be x1,...,xn,alpha; got {','.join(header)}"
        )
    scale = scale or Scale.unit_interval()
    pairs = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != n + 1:
            raise FormatError(f"{source}, row {lineno}: expected {n + 1} cells, got {len(row)}")
        try:
            values = [float(cell) for cell in row]
        except ValueError as exc:
            raise FormatError(f"{source}, row {lineno}: {exc}") from exc
        pairs.append((tuple(values[:n]), values[n]))
    try:
        return TrainingSet.from_pairs(n, scale, pairs)
    except Exception as exc:
        raise FormatError(f"{source}: {exc}") from exc


def load_training_set(
    path: str | Path, scale: Scale | None = None, tol: float | None = None
) -> TrainingSet:
    """Load a training set from a .csv file or a JSON document."""
    p = Path(path)
    if p.suffix.lower() == ".csv":
        try:
            text = p.read_text()
        except OSError as exc:
            raise FormatError(f"cannot read {path}: {exc}") from exc
        return training_set_from_csv_text(text, scale, source=str(path))
    return training_set_from_json(_read_json(p), tol)


def save_training_set(ts: TrainingSet, path: str | Path) -> None:
    Path(path).write_text(_dumps(training_set_to_json(ts)))


# ---------------------------------------------------------------------------
# learn reports


def report_to_json(report: LearnReport) -> dict:
    return {
        "mode": report.mode.value,
        "q": report.q,
        "consistent": report.consistent,
        "boundary_ok": report.boundary_ok,
        "distance": report.distance,
        "capacity": capacity_to_json(report.capacity) if report.capacity else None,
        "residuals": list(report.residuals) if report.residuals is not None else None,
        "notes": list(report.notes),
    }


def dumps_json(payload: Any) -> str:
    """Canonical JSON text used by every writer and by the CLI."""
    return _dumps(payload)
