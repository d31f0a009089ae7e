"""Face windings, the signed-crossing oracle, palettes and recoloring."""

import re

import numpy as np
import pytest

from strokelab.arrangement import build_arrangement
from strokelab.curves import Canvas, CanonicalCurve, close_curve
from strokelab.errors import PointOnCurve
from strokelab.geometry import GRID, GRID_STEP
from strokelab.winding import (
    ColoredDrawing,
    color_curve,
    color_for,
    colored_faces,
    compute_windings,
    face_sample_point,
    face_sample_points,
    make_palette,
    recolor,
    winding_at_point,
)


def curve_from(*pts) -> CanonicalCurve:
    return CanonicalCurve(np.array(pts, dtype=float), Canvas())


def in_face(face, q) -> bool:
    """Even-odd containment against the face's rings (matches SVG fill)."""
    inside = False
    for ring in face.rings:
        r = np.asarray(ring, dtype=float)
        for (x0, y0), (x1, y1) in zip(r[:-1], r[1:]):
            if (y0 > q[1]) != (y1 > q[1]):
                x_cross = x0 + (q[1] - y0) * (x1 - x0) / (y1 - y0)
                if q[0] < x_cross:
                    inside = not inside
    return inside


# -- pinned windings -------------------------------------------------------------


def test_simple_arc_encloses_winding_minus_one():
    d = color_curve(curve_from((0, 0.5), (0.5, 0.9), (1, 0.5)))
    assert [f.winding for f in d.faces] == [-1]
    assert d.winding_histogram == {-1: 1}


def test_alpha_loop_windings_by_hand():
    # the lobe is traversed counterclockwise: right, up, left, down
    d = color_curve(curve_from((0, 0.375), (0.75, 0.375), (0.75, 0.75),
                               (0.25, 0.75), (0.25, 0.125), (1, 0.125)))
    assert d.winding_histogram == {1: 1, -1: 1}
    lobe = [f for f in d.faces if in_face(f, (0.5, 0.55))]
    below = [f for f in d.faces if in_face(f, (0.5, 0.0))]
    outside = [f for f in d.faces if in_face(f, (0.5, 0.2))]
    assert [f.winding for f in lobe] == [1]
    assert [f.winding for f in below] == [-1]
    assert outside == []     # that pocket drains to infinity past x = 1


def test_unbounded_face_winds_zero(unit_corpus):
    for c in unit_corpus[:8]:
        arr = build_arrangement(close_curve(c))
        w = compute_windings(arr)
        assert w[arr.unbounded_face().id] == 0


def test_adjacent_faces_differ_by_one(unit_corpus):
    for c in unit_corpus[:12]:
        arr = build_arrangement(close_curve(c))
        w = compute_windings(arr)
        for h in arr.half_edges:
            assert abs(w[h.face] - w[arr.half_edges[h.twin].face]) == 1


def test_windings_match_the_crossing_oracle(unit_corpus):
    checked = 0
    for c in unit_corpus[:15]:
        arr = build_arrangement(close_curve(c))
        w = compute_windings(arr)
        for face in arr.bounded_faces():
            for q in face_sample_points(arr, face, count=3):
                assert winding_at_point(arr, q) == w[face.id]
                checked += 1
    assert checked >= 45


def test_rounded_and_raw_geometry_agree_away_from_the_boundary(unit_corpus):
    # crossing rounding moves the curve by at most about a cell, so a
    # sample at full clearance must count identically against the raw
    # snapped chain and the arrangement's subdivided edges
    for c in unit_corpus[:8]:
        chain = close_curve(c)
        arr = build_arrangement(chain)
        w = compute_windings(arr)
        for face in arr.bounded_faces():
            q = face_sample_point(arr, face)
            if _min_dist_to_ring_of(arr, face, q) >= 2 * GRID_STEP:
                assert winding_at_point(chain, q) == w[face.id]


def _min_dist_to_ring_of(arr, face, q):
    ring = arr.cycle_points(face.outer_boundary)
    ring = np.vstack([ring, ring[:1]])
    d = ring[1:] - ring[:-1]
    t = np.clip((((q - ring[:-1]) * d).sum(1)) / (d * d).sum(1), 0, 1)
    proj = ring[:-1] + t[:, None] * d
    return float(np.sqrt(((q - proj) ** 2).sum(1).min()))


# -- the oracle itself -----------------------------------------------------------


def test_winding_at_point_far_outside_is_zero():
    chain = close_curve(curve_from((0, 0.5), (0.4, 0.9), (1, 0.5)))
    assert winding_at_point(chain, (0.5, 0.99)) == 0
    # also accepts the bare closed point array
    assert winding_at_point(chain.points, (0.5, 0.99)) == 0


def test_winding_at_point_requires_a_closed_chain():
    with pytest.raises(ValueError):
        winding_at_point(np.array([[0.0, 0.5], [1.0, 0.5]]), (0.5, 0.7))


def test_point_exactly_on_the_curve_is_rejected():
    # a 45-degree segment passes through grid-cell centers, which is the
    # only way a query can collide with the snapped curve
    chain = close_curve(curve_from((0, 0.25), (0.5, 0.75), (1, 0.25)))
    q = (262145 / (2 * GRID), 786433 / (2 * GRID))
    with pytest.raises(PointOnCurve):
        winding_at_point(chain, q)


# -- interior samples -------------------------------------------------------------


def test_face_samples_are_distinct_and_inside(unit_corpus):
    full = 0
    for c in unit_corpus[:6]:
        arr = build_arrangement(close_curve(c))
        w = compute_windings(arr)
        for face in arr.bounded_faces():
            # thin slivers may hold fewer than 10 distinct sample cells
            pts = face_sample_points(arr, face, count=10)
            assert 1 <= len(pts) <= 10
            full += len(pts) == 10
            assert len({(p.x, p.y) for p in pts}) == len(pts)
            for q in pts:
                assert winding_at_point(arr, q) == w[face.id]
    assert full >= 5    # most faces are fat enough for the full ten


# -- palettes and recoloring -------------------------------------------------------


def test_make_palette():
    pal = make_palette(6)
    assert len(pal) == 6 and len(set(pal)) == 6
    assert all(re.fullmatch(r"#[0-9a-f]{6}", c) for c in pal)
    with pytest.raises(ValueError):
        make_palette(1)


def test_color_for_wraps_modulo_palette():
    pal = make_palette(5)
    for w in (-7, -1, 0, 1, 9):
        assert color_for(w, 0, pal) == pal[w % 5]
        assert color_for(w, 3, pal) == pal[(w + 3) % 5]


def test_recolor_rotates_classes(unit_corpus):
    d = color_curve(unit_corpus[2], offset=0)
    r1 = recolor(d, 1)
    assert isinstance(r1, ColoredDrawing)
    assert r1.windings == d.windings
    assert r1.winding_histogram == d.winding_histogram
    # equal windings keep equal colors under any rotation
    for a in r1.faces:
        for b in r1.faces:
            if a.winding == b.winding:
                assert a.color == b.color
    # rotating by the full palette is the identity
    rp = recolor(d, len(d.palette))
    assert [f.color for f in rp.faces] == [f.color for f in d.faces]
    assert rp.background == d.background
    # and the zero rotation reproduces the original
    r0 = recolor(d, 0)
    assert [f.color for f in r0.faces] == [f.color for f in d.faces]


def test_colored_drawing_parts(unit_corpus):
    d = color_curve(unit_corpus[0], offset=2)
    assert d.background == color_for(0, 2, d.palette)
    arr = d.arrangement
    assert len(d.faces) == len(arr.bounded_faces())
    for f in d.faces:
        assert f.color == color_for(f.winding, 2, d.palette)
        for ring in f.rings:
            assert np.array_equal(ring[0], ring[-1])


def test_colored_faces_respects_custom_palette(unit_corpus):
    arr = build_arrangement(close_curve(unit_corpus[1]))
    w = compute_windings(arr)
    pal = ("#000000", "#ffffff")
    faces = colored_faces(arr, w, 0, pal)
    assert {f.color for f in faces} <= set(pal)
