"""Planar subdivision induced by a closed chain's self-intersections.

All vertices (input points and crossings) are snapped to a 2**-20 grid and
every predicate runs on the integer grid coordinates, so construction is
exact and deterministic. Crossings are resolved by splitting segments at
the snapped intersection points; splitting is iterated because a snapped
crossing can, very rarely, introduce a new incidence. The result is a
half-edge structure whose faces are extracted by sorting half-edges
angularly around each vertex and walking next-cycles.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np

from .curves import ClosedChain
from .errors import DegenerateOverlap
from .geometry import (
    GridPoint,
    Point,
    collapse_consecutive,
    collinear_overlap,
    crossing_point,
    on_segment_interior,
    proper_crossing,
    ring_area2,
    snap_array,
    unsnap,
)

ALL_PAIRS_LIMIT = 512   # switch to the sweep above this many segments
MAX_SPLIT_PASSES = 16

Segment = tuple[GridPoint, GridPoint]


@dataclass(frozen=True)
class Vertex:
    id: int
    position: Point      # canvas units (exact: grid coordinates are dyadic)
    grid: GridPoint


@dataclass
class HalfEdge:
    id: int
    origin: int          # vertex id
    twin: int            # half-edge id; always id ^ 1
    next: int            # half-edge id, set during face extraction
    face: int            # face id, set during face extraction
    curve_dir: int       # +1 along the drawing's orientation, -1 against


@dataclass(frozen=True)
class Face:
    id: int
    outer_boundary: tuple[int, ...] | None   # half-edge cycle; None when unbounded
    holes: tuple[tuple[int, ...], ...]
    is_unbounded: bool

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        outer = (self.outer_boundary,) if self.outer_boundary is not None else ()
        return outer + self.holes


@dataclass(frozen=True, eq=False)
class Arrangement:
    vertices: tuple[Vertex, ...]
    half_edges: tuple[HalfEdge, ...]
    faces: tuple[Face, ...]
    source: ClosedChain

    @property
    def edge_count(self) -> int:
        return len(self.half_edges) // 2

    def dest(self, half_edge_id: int) -> int:
        return self.half_edges[half_edge_id ^ 1].origin

    def unbounded_face(self) -> Face:
        for f in self.faces:
            if f.is_unbounded:
                return f
        raise AssertionError("no unbounded face")

    def bounded_faces(self) -> list[Face]:
        return [f for f in self.faces if not f.is_unbounded]

    def cycle_grid(self, cycle: tuple[int, ...]) -> list[GridPoint]:
        return [self.vertices[self.half_edges[h].origin].grid for h in cycle]

    def cycle_points(self, cycle: tuple[int, ...]) -> np.ndarray:
        return np.array([self.vertices[self.half_edges[h].origin].position for h in cycle])


# ---------------------------------------------------------------------------
# Candidate pair discovery


def _bbox_arrays(segs: list[Segment]) -> tuple[np.ndarray, np.ndarray]:
    arr = np.array(segs, dtype=np.int64)          # (n, 2, 2)
    return arr.min(axis=1), arr.max(axis=1)


def _pairs_all(mins: np.ndarray, maxs: np.ndarray) -> list[tuple[int, int]]:
    ox = (mins[:, None, 0] <= maxs[None, :, 0]) & (mins[None, :, 0] <= maxs[:, None, 0])
    oy = (mins[:, None, 1] <= maxs[None, :, 1]) & (mins[None, :, 1] <= maxs[:, None, 1])
    mask = np.triu(ox & oy, k=1)
    return [(int(i), int(j)) for i, j in np.argwhere(mask)]


def _pairs_sweep(mins: np.ndarray, maxs: np.ndarray) -> list[tuple[int, int]]:
    """x-sweep with an active set; same candidate pairs as the all-pairs test."""
    order = np.lexsort((mins[:, 1], mins[:, 0]))
    active: list[int] = []
    out: list[tuple[int, int]] = []
    for idx in map(int, order):
        x0 = mins[idx, 0]
        active = [j for j in active if maxs[j, 0] >= x0]
        for j in active:
            if mins[idx, 1] <= maxs[j, 1] and mins[j, 1] <= maxs[idx, 1]:
                out.append((j, idx) if j < idx else (idx, j))
        active.append(idx)
    return out


def _candidate_pairs(segs: list[Segment]) -> list[tuple[int, int]]:
    mins, maxs = _bbox_arrays(segs)
    if len(segs) > ALL_PAIRS_LIMIT:
        return _pairs_sweep(mins, maxs)
    return _pairs_all(mins, maxs)


# ---------------------------------------------------------------------------
# Intersection discovery and snap-split resolution


def snap_chain(chain: ClosedChain) -> list[GridPoint]:
    """Snap a closed chain to the grid, dropping points merged by snapping."""
    g = collapse_consecutive(snap_array(chain.points))
    pts = [(int(x), int(y)) for x, y in g]
    if pts[0] != pts[-1]:
        raise AssertionError("snapping broke chain closure")
    if len(pts) < 4:
        raise DegenerateOverlap("chain collapses under snap rounding")
    return pts


def _chain_segments(grid: list[GridPoint]) -> list[Segment]:
    return [(grid[i], grid[i + 1]) for i in range(len(grid) - 1)]


def find_intersections(chain: ClosedChain) -> dict[tuple[int, int], Point]:
    """All transversal crossings between the chain's segments.

    Keys are index pairs (i < j) into the snapped chain's segment list;
    values are the crossing points snapped to the grid. Segments sharing an
    endpoint only meet there, which is not a transversal crossing, so
    adjacency needs no special casing under exact arithmetic.
    """
    segs = _chain_segments(snap_chain(chain))
    out: dict[tuple[int, int], Point] = {}
    for i, j in _candidate_pairs(segs):
        a, b = segs[i]
        c, d = segs[j]
        if collinear_overlap(a, b, c, d):
            raise DegenerateOverlap(f"segments {i} and {j} overlap")
        if proper_crossing(a, b, c, d):
            out[(i, j)] = unsnap(crossing_point(a, b, c, d))
    return out


def _find_splits(segs: list[Segment]) -> dict[int, set[GridPoint]]:
    splits: dict[int, set[GridPoint]] = defaultdict(set)
    for i, j in _candidate_pairs(segs):
        a, b = segs[i]
        c, d = segs[j]
        if collinear_overlap(a, b, c, d):
            raise DegenerateOverlap(f"segments {i} and {j} overlap")
        if proper_crossing(a, b, c, d):
            p = crossing_point(a, b, c, d)
            if p != a and p != b:
                splits[i].add(p)
            if p != c and p != d:
                splits[j].add(p)
        else:
            # T-incidences: an endpoint sitting in another segment's interior
            for v in (c, d):
                if on_segment_interior(a, b, v):
                    splits[i].add(v)
            for v in (a, b):
                if on_segment_interior(c, d, v):
                    splits[j].add(v)
    return splits


def _apply_splits(segs: list[Segment], splits: dict[int, set[GridPoint]]) -> list[Segment]:
    out: list[Segment] = []
    for idx, (a, b) in enumerate(segs):
        if idx not in splits:
            out.append((a, b))
            continue
        dx, dy = b[0] - a[0], b[1] - a[1]
        cuts = sorted(splits[idx],
                      key=lambda p: ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy, p))
        run = a
        for p in cuts:
            if p != run:
                out.append((run, p))
                run = p
        if run != b:
            out.append((run, b))
    return out


def _resolve_crossings(grid: list[GridPoint]) -> list[Segment]:
    segs = _chain_segments(grid)
    for _ in range(MAX_SPLIT_PASSES):
        splits = _find_splits(segs)
        if not splits:
            break
        segs = _apply_splits(segs, splits)
    else:
        raise DegenerateOverlap("snap rounding did not converge")
    seen: set[Segment] = set()
    for a, b in segs:
        key = (a, b) if a <= b else (b, a)
        if key in seen:
            raise DegenerateOverlap("coincident edges after snap rounding")
        seen.add(key)
    return segs


# ---------------------------------------------------------------------------
# Half-edge assembly and face extraction


def _halfplane(d: GridPoint) -> int:
    # 0 for the closed upper half (positive x-axis first), 1 for the lower
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _sort_ccw(dirs: dict[int, GridPoint], out_ids: list[int]) -> list[int]:
    def cmp(h1: int, h2: int) -> int:
        u, v = dirs[h1], dirs[h2]
        p1, p2 = _halfplane(u), _halfplane(v)
        if p1 != p2:
            return -1 if p1 < p2 else 1
        cr = u[0] * v[1] - u[1] * v[0]
        if cr:
            return -1 if cr > 0 else 1
        return 0    # parallel outgoing edges are excluded by overlap checks

    return sorted(out_ids, key=cmp_to_key(cmp))


def build_arrangement(chain: ClosedChain) -> Arrangement:
    """Build the half-edge subdivision of a closed chain.

    Faces are traced with their interior to the left of each half-edge, so
    the outer boundary of a bounded face runs counterclockwise (positive
    shoelace area) and the unbounded face's single cycle runs clockwise.
    """
    segs = _resolve_crossings(snap_chain(chain))

    vpos = sorted({p for seg in segs for p in seg})
    vid = {p: i for i, p in enumerate(vpos)}
    vertices = tuple(Vertex(i, unsnap(p), p) for i, p in enumerate(vpos))

    half_edges: list[HalfEdge] = []
    for k, (a, b) in enumerate(segs):
        half_edges.append(HalfEdge(2 * k, vid[a], 2 * k + 1, -1, -1, +1))
        half_edges.append(HalfEdge(2 * k + 1, vid[b], 2 * k, -1, -1, -1))

    outgoing: list[list[int]] = [[] for _ in vertices]
    dirs: dict[int, GridPoint] = {}
    for h in half_edges:
        o = vpos[h.origin]
        d = vpos[half_edges[h.twin].origin]
        dirs[h.id] = (d[0] - o[0], d[1] - o[1])
        outgoing[h.origin].append(h.id)

    rot_index: dict[int, int] = {}
    for v in vertices:
        ring = _sort_ccw(dirs, outgoing[v.id])
        outgoing[v.id] = ring
        for pos, hid in enumerate(ring):
            rot_index[hid] = pos

    # next(h): rotate clockwise from twin(h) around h's destination
    for h in half_edges:
        ring = outgoing[half_edges[h.twin].origin]
        h.next = ring[rot_index[h.twin] - 1]

    cycles: list[list[int]] = []
    for h in half_edges:
        if h.face != -1:
            continue
        cyc: list[int] = []
        cur = h.id
        while half_edges[cur].face == -1:
            half_edges[cur].face = len(cycles)
            cyc.append(cur)
            cur = half_edges[cur].next
        if cur != h.id:
            raise AssertionError("face walk did not close")
        cycles.append(cyc)

    unbounded = [i for i, cyc in enumerate(cycles)
                 if ring_area2([vpos[half_edges[h].origin] for h in cyc]) < 0]
    if len(unbounded) != 1:
        raise AssertionError(f"expected exactly one unbounded cycle, got {len(unbounded)}")
    ub = unbounded[0]

    faces = tuple(
        Face(i, None if i == ub else tuple(cyc),
             (tuple(cyc),) if i == ub else (),
             is_unbounded=(i == ub))
        for i, cyc in enumerate(cycles)
    )

    arr = Arrangement(vertices, tuple(half_edges), faces, chain)
    v, e, f = len(vertices), arr.edge_count, len(faces)
    if v - e + f != 2:
        raise AssertionError(f"Euler check failed: V={v} E={e} F={f}")
    return arr

