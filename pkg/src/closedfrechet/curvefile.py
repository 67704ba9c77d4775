"""JSON curve files: ``{"closed": true, "dimension": k, "points": [[...], ...]}``."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .geometry import ClosedCurve, GeometryError


class CurveFileError(ValueError):
    pass


def curve_from_dict(doc) -> ClosedCurve:
    if not isinstance(doc, dict):
        raise CurveFileError("curve file must hold a JSON object")
    if doc.get("closed") is not True:
        raise CurveFileError('only closed curves are supported ("closed": true)')
    points = doc.get("points")
    if not isinstance(points, list) or not points:
        raise CurveFileError('"points" must be a non-empty list')
    k = doc.get("dimension")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise CurveFileError('"dimension" must be a positive integer')
    for idx, p in enumerate(points):
        if not isinstance(p, list) or len(p) != k:
            raise CurveFileError(f"point {idx} does not have {k} coordinates")
        if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in p):
            raise CurveFileError(f"point {idx} has a non-numeric coordinate")
    try:
        return ClosedCurve(points)
    except GeometryError as exc:
        raise CurveFileError(str(exc)) from exc


def curve_to_dict(curve: ClosedCurve) -> dict:
    return {
        "closed": True,
        "dimension": curve.dimension,
        "points": curve.vertices.tolist(),
    }


def load_curve(path) -> ClosedCurve:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CurveFileError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    try:
        return curve_from_dict(doc)
    except CurveFileError as exc:
        raise CurveFileError(f"{path}: {exc}") from exc


def dump_curve(curve: ClosedCurve) -> str:
    return json.dumps(curve_to_dict(curve), indent=None) + "\n"


def save_curve(curve: ClosedCurve, path) -> None:
    Path(path).write_text(dump_curve(curve), encoding="utf-8")


def same_curve_document(a: dict, b: dict) -> bool:
    """Semantic equality of two curve documents (numbers compared as floats)."""
    return (
        a.get("closed") == b.get("closed")
        and a.get("dimension") == b.get("dimension")
        and np.array_equal(np.asarray(a["points"], float), np.asarray(b["points"], float))
    )
