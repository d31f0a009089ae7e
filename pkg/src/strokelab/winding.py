"""Winding numbers of arrangement faces and the colors they induce.

The face windings are propagated from the unbounded face (winding 0) across
edges: stepping over a half-edge from its left face to its right face
subtracts that half-edge's curve direction. `winding_at_point` is an
independent check via classic crossing counting; queries keep off the
vertex lattice (cell centers, or refined dyadic points for sliver faces)
so every comparison in the count is strict and exact in integers.
"""

from __future__ import annotations

import colorsys
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arrangement import Arrangement, Face, build_arrangement
from .curves import CanonicalCurve, close_curve
from .errors import PointOnCurve
from .geometry import (
    GRID,
    GRID_STEP,
    Point,
    collapse_consecutive,
    orient,
    snap_array,
    unsnap_array,
)

DEFAULT_PALETTE_SIZE = 8
SAMPLE_CLEARANCE = 2 * GRID_STEP


def make_palette(size: int = DEFAULT_PALETTE_SIZE) -> tuple[str, ...]:
    """Evenly spaced hues at fixed lightness/saturation, as #RRGGBB."""
    if size < 2:
        raise ValueError("a palette needs at least 2 colors")
    out = []
    for i in range(size):
        r, g, b = colorsys.hls_to_rgb(i / size, 0.60, 0.65)
        out.append(f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}")
    return tuple(out)


def color_for(winding: int, offset: int, palette: tuple[str, ...]) -> str:
    # Python's % is already the Euclidean mod for a positive modulus
    return palette[(winding + offset) % len(palette)]


def compute_windings(arr: Arrangement) -> tuple[int, ...]:
    """Winding number per face id, spread outward from the unbounded face."""
    by_face: dict[int, list[int]] = {}
    for h in arr.half_edges:
        by_face.setdefault(h.face, []).append(h.id)

    windings: list[int | None] = [None] * len(arr.faces)
    start = arr.unbounded_face().id
    windings[start] = 0
    queue = deque([start])
    while queue:
        f = queue.popleft()
        wf = windings[f]
        for hid in by_face[f]:
            h = arr.half_edges[hid]
            g = arr.half_edges[h.twin].face
            wg = wf - h.curve_dir
            if windings[g] is None:
                windings[g] = wg
                queue.append(g)
            elif windings[g] != wg:
                raise AssertionError(f"inconsistent winding at faces {f}/{g}")
    if any(w is None for w in windings):
        raise AssertionError("arrangement faces are not edge-connected")
    return tuple(windings)  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Crossing-count winding


def _cell_center(x: float, y: float) -> tuple[int, int]:
    # doubled grid coordinates; both odd, so the query never shares a
    # coordinate with a snapped vertex and every inequality below is strict
    return 2 * math.floor(x * GRID) + 1, 2 * math.floor(y * GRID) + 1


def _crossing_count(S: np.ndarray, T: np.ndarray, qx: int, qy: int) -> tuple[int, bool]:
    """(winding, on_boundary) of doubled integer segments around an odd point."""
    sx, sy = S[:, 0], S[:, 1]
    tx, ty = T[:, 0], T[:, 1]
    up = (sy < qy) & (qy < ty)
    dn = (ty < qy) & (qy < sy)
    cross = (tx - sx) * (qy - sy) - (ty - sy) * (qx - sx)
    on = bool(np.any((up | dn) & (cross == 0)))
    w = int(np.count_nonzero(up & (cross > 0))) - int(np.count_nonzero(dn & (cross < 0)))
    return w, on


def _exact_winding(S: np.ndarray, T: np.ndarray,
                   fx: Fraction, fy: Fraction) -> tuple[int, bool]:
    """Crossing count around an exact dyadic query, in plain integers.

    fx, fy are the query in grid units; fy must not be an integer, so its
    scaled numerator is odd and every straddle comparison below is strict.
    """
    mx, my = fx.denominator, fy.denominator      # powers of two
    qx, qy = fx.numerator, fy.numerator
    w = 0
    for (sx, sy), (tx, ty) in zip(S.tolist(), T.tolist()):
        sy2, ty2 = sy * my, ty * my
        if not (sy2 < qy < ty2 or ty2 < qy < sy2):
            continue
        cross = (tx - sx) * (qy - sy2) * mx - (ty - sy) * my * (qx - sx * mx)
        if cross == 0:
            return w, True
        if sy2 < qy:
            w += cross > 0
        else:
            w -= cross < 0
    return w, False


@lru_cache(maxsize=8)
def _arrangement_segments(arr: Arrangement) -> tuple[np.ndarray, np.ndarray]:
    """Directed grid segments along the curve, crossings subdivided in."""
    segs = [(arr.vertices[h.origin].grid, arr.vertices[arr.dest(h.id)].grid)
            for h in arr.half_edges if h.curve_dir == 1]
    a = np.array(segs, dtype=np.int64)
    return a[:, 0, :], a[:, 1, :]


def winding_at_point(chain, q: Point) -> int:
    """Winding number of the curve around q by crossing counting.

    Accepts an Arrangement, a ClosedChain, or a closed (n, 2) point array.
    An Arrangement is counted over its own subdivided edges — the rounded
    geometry its faces partition — while a chain is snapped but keeps its
    crossings unrounded. The count only depends on the directed edge set,
    never on cycle or face structure, so it stays an independent check on
    the face windings. A query on a lattice row snaps to the center of its
    grid cell; anything else is evaluated exactly (floats are dyadic, so
    clearing denominators keeps every comparison in integers). Raises
    PointOnCurve when the query lands on a segment.
    """
    if isinstance(chain, Arrangement):
        S, T = _arrangement_segments(chain)
    else:
        points = getattr(chain, "points", chain)
        P = collapse_consecutive(snap_array(np.asarray(points, dtype=float)))
        if P[0, 0] != P[-1, 0] or P[0, 1] != P[-1, 1]:
            raise ValueError("winding_at_point expects a closed polyline")
        S, T = P[:-1], P[1:]
    fx = Fraction(float(q[0])) * GRID
    fy = Fraction(float(q[1])) * GRID
    if fy.denominator == 1:
        qx, qy = _cell_center(q[0], q[1])
        w, on = _crossing_count(S * 2, T * 2, qx, qy)
    elif fx.denominator == 2 and fy.denominator == 2:
        w, on = _crossing_count(S * 2, T * 2, fx.numerator, fy.numerator)
    else:
        w, on = _exact_winding(S, T, fx, fy)
    if on:
        raise PointOnCurve(f"query point ({q[0]!r}, {q[1]!r}) lies on the curve")
    return w


# ---------------------------------------------------------------------------
# Interior sample points


def _ring_contains(ring2: np.ndarray, qx: int, qy: int) -> bool:
    w, on = _crossing_count(ring2[:-1], ring2[1:], qx, qy)
    return not on and w == 1


def _min_dist_to_ring(ring_pts: np.ndarray, q: np.ndarray) -> float:
    p0, p1 = ring_pts[:-1], ring_pts[1:]
    d = p1 - p0
    l2 = (d * d).sum(axis=1)
    t = np.clip(((q - p0) * d).sum(axis=1) / l2, 0.0, 1.0)
    proj = p0 + t[:, None] * d
    return float(np.sqrt(((q - proj) ** 2).sum(axis=1).min()))


def _contains_refined(ring: list, qx: int, qy: int, m: int) -> bool:
    """Strict containment of an odd/odd query at grid scale 2**m, exactly."""
    M = 1 << m
    w = 0
    for (sx, sy), (tx, ty) in zip(ring, ring[1:] + ring[:1]):
        sy2, ty2 = sy * M, ty * M
        if not (sy2 < qy < ty2 or ty2 < qy < sy2):
            continue
        cross = (tx - sx) * (qy - sy2) - (ty - sy) * (qx - sx * M)
        if cross == 0:
            return False
        if sy2 < qy:
            w += cross > 0
        else:
            w -= cross < 0
    return w == 1


def _sliver_samples(ring: list, count: int) -> list[Point]:
    """Interior points for faces so thin that no grid-cell center fits.

    A minimal lattice triangle contains no half-integer point at all, so
    clearance is abandoned: pick a convex corner v, aim at the farthest
    ring vertex inside its ear (or creep along the median when the ear is
    empty), and accept the first refined odd/odd dyadic point that passes
    the exact containment test.
    """
    n = len(ring)
    targets: list[tuple[Fraction, Fraction, tuple]] = []
    for i in sorted(range(n), key=lambda k: (ring[k][1], ring[k][0])):
        a, v, b = ring[i - 1], ring[i], ring[(i + 1) % n]
        if orient(a, v, b) <= 0:
            continue
        best = None
        for w in ring:
            if w in (a, v, b):
                continue
            if orient(a, v, w) > 0 and orient(v, b, w) > 0 and orient(b, a, w) > 0:
                depth = abs((b[0] - a[0]) * (w[1] - a[1])
                            - (b[1] - a[1]) * (w[0] - a[0]))
                if best is None or depth > best[0]:
                    best = (depth, w)
        if best is not None:
            targets.append((Fraction(best[1][0]), Fraction(best[1][1]), v))
        targets.append((Fraction(a[0] + b[0], 2), Fraction(a[1] + b[1], 2), v))
        if len(targets) >= 16:
            break

    found: list[Point] = []
    seen: set[tuple[int, int, int]] = set()
    for tx, ty, v in targets:
        for j in range(1, 25):              # creep toward the corner
            px = v[0] + (tx - v[0]) / (1 << j)
            py = v[1] + (ty - v[1]) / (1 << j)
            for m in range(2, 33):
                qx = 2 * math.floor(px * (1 << (m - 1))) + 1
                qy = 2 * math.floor(py * (1 << (m - 1))) + 1
                key = (qx, qy, m)
                if key in seen:
                    continue
                seen.add(key)
                if _contains_refined(ring, qx, qy, m):
                    scale = float(GRID * (1 << m))
                    found.append(Point(qx / scale, qy / scale))
                    if len(found) == count:
                        return found
                    break                   # creep on: distinct nearby cells
        if found:
            break
    return found


def face_sample_points(arr: Arrangement, face: Face, count: int = 1,
                       clearance: float = SAMPLE_CLEARANCE) -> list[Point]:
    """Points strictly inside a bounded face, kept clear of its boundary.

    Candidates (vertex-triple centroids, inward edge offsets, then seeded
    rejection samples) are snapped to grid-cell centers and accepted by the
    exact containment test plus a distance margin to the boundary ring.
    Thin faces may yield fewer than ``count`` points, falling back to an
    exact construction on a refined grid when no cell center fits (never
    zero).
    """
    if face.is_unbounded:
        raise ValueError("unbounded face has no interior sample")
    ring = arr.cycle_grid(face.outer_boundary)
    closed = np.array(ring + [ring[0]], dtype=np.int64)
    ring2 = closed * 2
    ring_f = unsnap_array(closed)
    n = len(ring)

    def candidates():
        for i in range(n):
            a, b, c = ring_f[i], ring_f[(i + 1) % n], ring_f[(i + 2) % n]
            yield (a + b + c) / 3.0
        for k in (4.0, 16.0, 64.0):
            for i in range(n):
                a, b = ring_f[i], ring_f[(i + 1) % n]
                d = b - a
                norm = math.sqrt(d[0] * d[0] + d[1] * d[1])
                left = np.array([-d[1], d[0]]) / norm    # interior side
                yield (a + b) / 2.0 + left * (k * GRID_STEP)
        rng = np.random.default_rng(1000003 * len(arr.vertices) + face.id)
        lo, hi = ring_f.min(axis=0), ring_f.max(axis=0)
        for _ in range(1024):
            yield lo + rng.random(2) * (hi - lo)

    found: list[Point] = []
    seen: set[tuple[int, int]] = set()
    for margin in (clearance, GRID_STEP):
        for cand in candidates():
            q = _cell_center(cand[0], cand[1])
            if q in seen or not _ring_contains(ring2, q[0], q[1]):
                continue
            qf = np.array(q) / (2 * GRID)
            if _min_dist_to_ring(ring_f, qf) >= margin:
                seen.add(q)
                found.append(Point(qf[0], qf[1]))
                if len(found) == count:
                    return found
        if found:
            return found
    found = _sliver_samples(ring, count)
    if not found:
        raise AssertionError(f"no interior sample found for face {face.id}")
    return found


def face_sample_point(arr: Arrangement, face: Face,
                      clearance: float = SAMPLE_CLEARANCE) -> Point:
    return face_sample_points(arr, face, 1, clearance)[0]


# ---------------------------------------------------------------------------
# Colored drawings


@dataclass(frozen=True, eq=False)
class ColoredFace:
    face_id: int
    winding: int
    color: str
    rings: tuple[np.ndarray, ...]     # closed rings, canvas coordinates


@dataclass(frozen=True, eq=False)
class ColoredDrawing:
    curve: CanonicalCurve
    arrangement: Arrangement
    windings: tuple[int, ...]         # by face id
    palette: tuple[str, ...]
    offset: int
    faces: tuple[ColoredFace, ...]    # bounded faces only
    background: str                   # unbounded face's color

    @property
    def winding_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for f in self.faces:
            hist[f.winding] = hist.get(f.winding, 0) + 1
        return hist


def colored_faces(arr: Arrangement, windings: tuple[int, ...],
                   offset: int, palette: tuple[str, ...]) -> tuple[ColoredFace, ...]:
    out = []
    for f in arr.bounded_faces():
        ring = arr.cycle_points(f.outer_boundary)
        ring = np.vstack([ring, ring[:1]])
        out.append(ColoredFace(f.id, windings[f.id],
                               color_for(windings[f.id], offset, palette),
                               (ring,)))
    return tuple(out)


def color_curve(curve: CanonicalCurve, offset: int = 0,
                palette: tuple[str, ...] | None = None) -> ColoredDrawing:
    """Close the curve, build its arrangement and color faces by winding."""
    pal = palette if palette is not None else make_palette()
    arr = build_arrangement(close_curve(curve))
    windings = compute_windings(arr)
    return ColoredDrawing(curve, arr, windings, pal, offset,
                          colored_faces(arr, windings, offset, pal),
                          color_for(0, offset, pal))


def recolor(drawing: ColoredDrawing, offset: int) -> ColoredDrawing:
    """Same faces, palette rotated by a new offset."""
    return ColoredDrawing(drawing.curve, drawing.arrangement, drawing.windings,
                          drawing.palette, offset,
                          colored_faces(drawing.arrangement, drawing.windings,
                                         offset, drawing.palette),
                          color_for(0, offset, drawing.palette))
