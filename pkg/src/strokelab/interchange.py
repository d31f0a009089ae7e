"""The drawing interchange format and the derived export payloads.

A drawing travels as a JSON object with fields ``canvas`` {w, h},
``points`` [[x, y], ...] and optional ``id`` / ``created_at`` (RFC 3339
string, treated as opaque). The same object is one line of the gallery
log. Floats are emitted with repr-round-tripping, so parse(dump(x))
reproduces coordinates bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .curves import Canvas
from .errors import ValidationError


@dataclass(frozen=True, eq=False)
class ParsedDrawing:
    points: np.ndarray
    canvas: Canvas
    id: str | None
    created_at: str | None


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where} must be a number")
    return float(value)


def parse_drawing(obj: Any) -> ParsedDrawing:
    """Validate an interchange object's structure (not its geometry)."""
    if not isinstance(obj, dict):
        raise ValidationError("drawing must be an object")
    canvas_obj = obj.get("canvas")
    if not isinstance(canvas_obj, dict):
        raise ValidationError("drawing.canvas must be an object with w and h")
    w = _require_number(canvas_obj.get("w"), "canvas.w")
    h = _require_number(canvas_obj.get("h"), "canvas.h")
    if w <= 0 or h <= 0:
        raise ValidationError("canvas dimensions must be positive")
    raw_points = obj.get("points")
    if not isinstance(raw_points, list):
        raise ValidationError("drawing.points must be a list of [x, y] pairs")
    pts = []
    for i, p in enumerate(raw_points):
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise ValidationError(f"points[{i}] must be an [x, y] pair")
        pts.append((_require_number(p[0], f"points[{i}].x"),
                    _require_number(p[1], f"points[{i}].y")))
    drawing_id = obj.get("id")
    if drawing_id is not None and not isinstance(drawing_id, str):
        raise ValidationError("drawing.id must be a string")
    created_at = obj.get("created_at")
    if created_at is not None and not isinstance(created_at, str):
        raise ValidationError("drawing.created_at must be a string")
    points = np.array(pts, dtype=float).reshape(len(pts), 2)
    return ParsedDrawing(points, Canvas(w, h), drawing_id, created_at)


def parse_drawing_text(text: str) -> ParsedDrawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid drawing JSON: {exc}") from None
    return parse_drawing(obj)


def drawing_to_obj(points: np.ndarray, canvas: Canvas,
                   drawing_id: str | None = None,
                   created_at: str | None = None) -> dict:
    obj: dict[str, Any] = {}
    if drawing_id is not None:
        obj["id"] = drawing_id
    obj["canvas"] = {"w": canvas.w, "h": canvas.h}
    obj["points"] = [[float(x), float(y)] for x, y in np.asarray(points, dtype=float)]
    if created_at is not None:
        obj["created_at"] = created_at
    return obj


def drawing_to_line(points: np.ndarray, canvas: Canvas,
                    drawing_id: str | None = None,
                    created_at: str | None = None) -> str:
    """One log line: compact, key-sorted, newline-free JSON."""
    obj = drawing_to_obj(points, canvas, drawing_id, created_at)
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


# ---------------------------------------------------------------------------
# Export payloads (colored drawings, morphs)


def _rings_to_obj(rings) -> list:
    return [[[float(x), float(y)] for x, y in ring] for ring in rings]


def colored_to_obj(faces, background: str) -> dict:
    """Colored-drawing export: faces with winding, #RRGGBB color and rings."""
    return {
        "background": background,
        "faces": [
            {"winding": f.winding, "color": f.color, "rings": _rings_to_obj(f.rings)}
            for f in faces
        ],
    }


def morph_to_obj(frames, distance: float) -> dict:
    out = []
    for f in frames:
        frame_obj: dict[str, Any] = {
            "t": f.t,
            "curve": [[float(x), float(y)] for x, y in f.curve],
        }
        if f.error is not None:
            frame_obj["error"] = f.error
        else:
            frame_obj["colored"] = colored_to_obj(f.colored, f.background)
        out.append(frame_obj)
    return {"distance": distance, "frames": out}
