"""JSON reading and writing for scalars, vectors, matrices and topologies.

The semifield zero is written as the string ``"bottom"``. Readers also accept
``"-inf"`` for the max-plus carriers.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import ParseError
from .function_space import FiniteTopology, make_topology
from .semifield import RMAX, Semifield, get_semifield

BOTTOM = "bottom"


def scalar_to_json(value, sf: Semifield = RMAX):
    value = float(value)
    if value == sf.zero:
        return BOTTOM
    return value


def scalar_from_json(token, sf: Semifield = RMAX) -> float:
    if isinstance(token, str):
        if token == BOTTOM:
            return float(sf.zero)
        if token == "-inf" and sf.zero == -math.inf:
            return -math.inf
        raise ParseError(f"unrecognized scalar token {token!r}")
    if isinstance(token, bool) or not isinstance(token, (int, float)):
        raise ParseError(f"scalar must be a number or {BOTTOM!r}, got {token!r}")
    value = float(token)
    if value == sf.zero or not math.isfinite(value) or not sf.contains(value):
        raise ParseError(f"{token!r} is not a nonzero element of {sf.name}; write {BOTTOM!r} for zero")
    return value


def vector_to_json(x, sf: Semifield = RMAX) -> list:
    return [scalar_to_json(v, sf) for v in np.asarray(x, dtype=float)]


def matrix_to_json(a, sf: Semifield = RMAX) -> list:
    return [vector_to_json(row, sf) for row in np.asarray(a, dtype=float)]


def _semifield_of(doc: dict, sf: Semifield | None) -> Semifield:
    name = doc.get("semifield")
    if name is None:
        return sf or RMAX
    try:
        declared = get_semifield(name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if sf is not None and sf is not declared:
        raise ParseError(f"file declares semifield {name!r} but {sf.name!r} was requested")
    return declared


def parse_matrix(doc, sf: Semifield | None = None):
    """Return (matrix, semifield) from ``{"semifield": ..., "rows": [[...], ...]}``."""
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ParseError('matrix document needs a "rows" field')
    sf = _semifield_of(doc, sf)
    rows = doc["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("rows must be a nonempty list of lists")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise ParseError("ragged or empty matrix rows")
    return np.array([[scalar_from_json(v, sf) for v in r] for r in rows], dtype=float), sf


def parse_vector(doc, sf: Semifield | None = None):
    """Return (vector, semifield) from ``{"semifield": ..., "values": [...]}``."""
    if not isinstance(doc, dict) or "values" not in doc:
        raise ParseError('vector document needs a "values" field')
    sf = _semifield_of(doc, sf)
    values = doc["values"]
    if not isinstance(values, list) or not values:
        raise ParseError("values must be a nonempty list")
    return np.array([scalar_from_json(v, sf) for v in values], dtype=float), sf


def parse_topology(doc) -> FiniteTopology:
    if not isinstance(doc, dict) or "points" not in doc or "closed_sets" not in doc:
        raise ParseError('topology document needs "points" and "closed_sets"')
    points, closed = doc["points"], doc["closed_sets"]
    if not isinstance(points, int) or isinstance(points, bool):
        raise ParseError("points must be an integer")
    if not isinstance(closed, list) or not all(isinstance(s, list) for s in closed):
        raise ParseError("closed_sets must be a list of index lists")
    return make_topology(points, closed)


def matrix_doc(a, sf: Semifield = RMAX) -> dict:
    return {"semifield": sf.name, "rows": matrix_to_json(a, sf)}


def vector_doc(x, sf: Semifield = RMAX) -> dict:
    return {"semifield": sf.name, "values": vector_to_json(x, sf)}


def topology_doc(t: FiniteTopology) -> dict:
    return {"points": t.points, "closed_sets": t.sorted_closed_sets()}


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
