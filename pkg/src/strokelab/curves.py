"""Stroke validation, arc-length canonicalization, and canonical closure.

A raw stroke is accepted when it runs left to right; it is cleaned and its
endpoints snapped onto the canvas edges, then resampled to uniform arc
spacing. Closing the curve through a fixed detour below the canvas makes
every zone's winding number a well-defined integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BadSampleCount, NonFinite, NotLeftToRight, OutOfCanvas, TooFewPoints
from .geometry import collapse_consecutive, resample_points, seg_lengths

DEFAULT_SAMPLES = 256
EDGE_TOLERANCE = 1e-6       # how far outside the canvas a point may sit
CLOSURE_MARGIN = 0.1        # return-path clearance, as a fraction of canvas size


class Canvas(NamedTuple):
    w: float = 1.0
    h: float = 1.0


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an (n, 2) array-like")
    return pts


def _check_canvas(canvas: Canvas) -> Canvas:
    canvas = Canvas(float(canvas[0]), float(canvas[1]))
    if not (np.isfinite(canvas.w) and np.isfinite(canvas.h)) or canvas.w <= 0 or canvas.h <= 0:
        raise ValueError(f"invalid canvas {canvas}")
    return canvas


@dataclass(frozen=True)
class RawStroke:
    """An ordered point sequence as captured, plus the canvas it lives on."""

    points: np.ndarray
    canvas: Canvas = Canvas()

    def __post_init__(self):
        object.__setattr__(self, "points", _as_points(self.points))
        object.__setattr__(self, "canvas", _check_canvas(self.canvas))
        self.points.setflags(write=False)


@dataclass(frozen=True, eq=False)
class CanonicalCurve:
    """Validated left-to-right polyline resampled to uniform arc spacing.

    Invariants checked here: at least two points, all finite, consecutive
    points distinct, first point on the left canvas edge and last on the
    right. Uniform spacing is guaranteed by construction in `resample`.
    """

    points: np.ndarray
    canvas: Canvas = Canvas()

    def __post_init__(self):
        pts = _as_points(self.points)
        canvas = _check_canvas(self.canvas)
        if len(pts) < 2:
            raise TooFewPoints(f"{len(pts)} point(s)")
        if not np.all(np.isfinite(pts)):
            raise NonFinite("curve contains NaN or infinity")
        if np.any(np.all(pts[1:] == pts[:-1], axis=1)):
            raise ValueError("consecutive duplicate points")
        if pts[0, 0] != 0.0 or pts[-1, 0] != canvas.w:
            raise ValueError("endpoints must sit on the left/right canvas edges")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "canvas", canvas)
        self.points.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, CanonicalCurve):
            return NotImplemented
        return self.canvas == other.canvas and np.array_equal(self.points, other.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def length(self) -> float:
        return float(seg_lengths(self.points).sum())


@dataclass(frozen=True)
class ClosedChain:
    """Closed polyline: the drawn curve followed by the canonical return path.

    `curve_count` is the number of leading points that belong to the drawn
    curve; the remainder is the return path, which stays strictly outside
    the canvas.
    """

    points: np.ndarray
    canvas: Canvas
    curve_count: int

    def __post_init__(self):
        pts = _as_points(self.points)
        if np.any(pts[0] != pts[-1]):
            raise ValueError("chain must be closed (first point == last point)")
        object.__setattr__(self, "points", pts)
        self.points.setflags(write=False)


def validate_stroke(raw: RawStroke) -> RawStroke:
    """Clean and validate a raw stroke.

    Drops consecutive duplicates, rejects strokes that do not run left to
    right or leave the canvas, and snaps the first point onto x=0 and the
    last onto x=canvas.w (keeping their y).
    """
    pts = raw.points
    canvas = raw.canvas
    if not np.all(np.isfinite(pts)):
        raise NonFinite("stroke contains NaN or infinity")
    pts = collapse_consecutive(pts)
    if len(pts) < 2:
        raise TooFewPoints(f"{len(pts)} distinct point(s)")
    if pts[-1, 0] <= pts[0, 0]:
        raise NotLeftToRight(f"stroke runs from x={pts[0, 0]:g} to x={pts[-1, 0]:g}")
    tol = EDGE_TOLERANCE
    if (np.any(pts[:, 0] < -tol) or np.any(pts[:, 0] > canvas.w + tol)
            or np.any(pts[:, 1] < -tol) or np.any(pts[:, 1] > canvas.h + tol)):
        raise OutOfCanvas("stroke leaves the canvas")
    pts = pts.copy()
    pts[0, 0] = 0.0
    pts[-1, 0] = canvas.w
    pts = collapse_consecutive(pts)  # snapping may merge boundary points
    if len(pts) < 2:
        raise TooFewPoints("stroke collapses after endpoint snapping")
    return RawStroke(pts, canvas)


def resample(stroke: RawStroke, n: int = DEFAULT_SAMPLES) -> CanonicalCurve:
    """Resample a validated stroke to n points uniform in arc length."""
    if n < 2:
        raise BadSampleCount(f"n={n}")
    pts = collapse_consecutive(stroke.points)
    if len(pts) < 2:
        raise TooFewPoints("need at least 2 distinct points")
    return CanonicalCurve(resample_points(pts, n), stroke.canvas)


def canonicalize(raw: RawStroke, n: int = DEFAULT_SAMPLES) -> CanonicalCurve:
    """validate_stroke followed by resample."""
    return resample(validate_stroke(raw), n)


def close_points(points: np.ndarray, canvas: Canvas) -> ClosedChain:
    """Close a left-to-right polyline through the canonical return path.

    From the right endpoint: out to x = (1+m)W, down to y = -mH, left to
    x = -mW, up to the start's y, and back to the start (m = CLOSURE_MARGIN).
    The detour stays strictly outside the canvas, so it never crosses the
    drawn curve.
    """
    pts = _as_points(points)
    w, h = canvas
    m = CLOSURE_MARGIN
    x0, y0 = pts[0]
    y1 = pts[-1, 1]
    tail = np.array([
        ((1 + m) * w, y1),
        ((1 + m) * w, -m * h),
        (-m * w, -m * h),
        (-m * w, y0),
        (x0, y0),
    ])
    return ClosedChain(np.concatenate([pts, tail]), canvas, curve_count=len(pts))


def close_curve(curve: CanonicalCurve) -> ClosedChain:
    return close_points(curve.points, curve.canvas)
