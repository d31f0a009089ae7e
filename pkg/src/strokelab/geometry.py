"""Exact 2-D primitives on a snapped integer grid.

Robust predicates run on integer grid coordinates (canvas units times
``GRID``), so sign tests are exact and constructed vertices land back on
the grid. Grid coordinates stay far below 2**53, which also makes the
float image of a grid point exact. Float helpers (arc length, uniform
resampling) are used only where exactness is not required.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

GRID_BITS = 20
GRID = 1 << GRID_BITS       # grid cells per canvas unit
GRID_STEP = 1.0 / GRID      # snap resolution in canvas units

GridPoint = tuple[int, int]


class Point(NamedTuple):
    x: float
    y: float


def snap(p) -> GridPoint:
    """Round a point in canvas units to integer grid coordinates."""
    x, y = float(p[0]), float(p[1])
    return (round(x * GRID), round(y * GRID))


def unsnap(g: GridPoint) -> Point:
    # Grid coordinates are dyadic, so the division is exact in binary floats.
    return Point(g[0] / GRID, g[1] / GRID)


def snap_array(pts) -> np.ndarray:
    """Round an (n, 2) array of canvas-unit points to int64 grid coordinates."""
    return np.rint(np.asarray(pts, dtype=float) * GRID).astype(np.int64)


def unsnap_array(grid_pts: np.ndarray) -> np.ndarray:
    return np.asarray(grid_pts, dtype=float) / GRID


def collapse_consecutive(pts: np.ndarray) -> np.ndarray:
    """Drop points equal to their predecessor (exact comparison)."""
    pts = np.asarray(pts)
    if len(pts) < 2:
        return pts
    keep = np.empty(len(pts), dtype=bool)
    keep[0] = True
    keep[1:] = np.any(pts[1:] != pts[:-1], axis=1)
    return pts[keep]


# ---------------------------------------------------------------------------
# Exact predicates on grid points (plain python ints; never overflow)


def orient(a: GridPoint, b: GridPoint, c: GridPoint) -> int:
    """Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def proper_crossing(p: GridPoint, q: GridPoint, r: GridPoint, s: GridPoint) -> bool:
    """True iff segments pq and rs cross at a point interior to both."""
    o1 = orient(p, q, r)
    o2 = orient(p, q, s)
    if o1 * o2 >= 0:
        return False
    o3 = orient(r, s, p)
    o4 = orient(r, s, q)
    return o3 * o4 < 0


def crossing_point(p: GridPoint, q: GridPoint, r: GridPoint, s: GridPoint) -> GridPoint:
    """Snapped intersection of two properly crossing grid segments.

    The exact rational intersection is computed with integer arithmetic and
    rounded (half-even) back onto the grid.
    """
    dqx, dqy = q[0] - p[0], q[1] - p[1]
    dsx, dsy = s[0] - r[0], s[1] - r[1]
    den = dqx * dsy - dqy * dsx
    num = (r[0] - p[0]) * dsy - (r[1] - p[1]) * dsx
    t = Fraction(num, den)
    return (round(p[0] + t * dqx), round(p[1] + t * dqy))


def on_segment_interior(a: GridPoint, b: GridPoint, p: GridPoint) -> bool:
    """True iff p lies on segment ab strictly between the endpoints."""
    if p == a or p == b:
        return False
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def collinear_overlap(p: GridPoint, q: GridPoint, r: GridPoint, s: GridPoint) -> bool:
    """True iff pq and rs are collinear and share more than one point."""
    if orient(p, q, r) != 0 or orient(p, q, s) != 0:
        return False
    ax = 0 if abs(q[0] - p[0]) >= abs(q[1] - p[1]) else 1
    lo1, hi1 = sorted((p[ax], q[ax]))
    lo2, hi2 = sorted((r[ax], s[ax]))
    return max(lo1, lo2) < min(hi1, hi2)


def ring_area2(ring: list[GridPoint]) -> int:
    """Twice the signed area of a closed ring of grid points (exact)."""
    total = 0
    n = len(ring)
    for i in range(n):
        x0, y0 = ring[i]
        x1, y1 = ring[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


# ---------------------------------------------------------------------------
# Float helpers


def seg_lengths(pts: np.ndarray) -> np.ndarray:
    d = np.diff(np.asarray(pts, dtype=float), axis=0)
    return np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])


def cumulative_lengths(pts: np.ndarray) -> np.ndarray:
    """Cumulative arc length with a leading zero; length n for n points."""
    return np.concatenate(([0.0], np.cumsum(seg_lengths(pts))))


def polyline_length(pts: np.ndarray) -> float:
    return float(seg_lengths(pts).sum())


def resample_points(pts, n: int) -> np.ndarray:
    """n points uniformly spaced by arc length along the polyline.

    Endpoints are preserved exactly. The input needs at least two distinct
    points so the total length is positive.
    """
    pts = np.asarray(pts, dtype=float)
    cum = cumulative_lengths(pts)
    total = cum[-1]
    targets = np.linspace(0.0, total, n)
    out = np.column_stack((
        np.interp(targets, cum, pts[:, 0]),
        np.interp(targets, cum, pts[:, 1]),
    ))
    # np.interp can drift at the exact ends; pin them
    out[0] = pts[0]
    out[-1] = pts[-1]
    return out


def point_dist(a, b) -> float:
    dx = float(a[0]) - float(b[0])
    dy = float(a[1]) - float(b[1])
    return float(np.sqrt(dx * dx + dy * dy))
