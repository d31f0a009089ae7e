"""Stroke validation, canonicalization, and canvas closure."""

import numpy as np
import pytest

from strokelab.arrangement import snap_chain, find_intersections
from strokelab.curves import (
    Canvas,
    CanonicalCurve,
    ClosedChain,
    DEFAULT_SAMPLES,
    RawStroke,
    canonicalize,
    close_curve,
    close_points,
    resample,
    validate_stroke,
)
from strokelab.errors import (
    BadSampleCount,
    NonFinite,
    NotLeftToRight,
    OutOfCanvas,
    TooFewPoints,
)
from strokelab import synth
from strokelab.geometry import polyline_length


def stroke(*pts, canvas=None):
    return RawStroke(np.array(pts, dtype=float), canvas or Canvas())


# -- validation ----------------------------------------------------------------


def test_validate_accepts_a_plain_arc():
    out = validate_stroke(stroke((0, 0.5), (0.5, 0.9), (1, 0.4)))
    assert out.points.shape == (3, 2)


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        validate_stroke(stroke((0, 0.5)))


def test_duplicates_collapse_before_the_count_check():
    with pytest.raises(TooFewPoints):
        validate_stroke(stroke((0, 0.5), (0, 0.5), (0, 0.5)))


def test_non_finite_rejected():
    with pytest.raises(NonFinite):
        validate_stroke(stroke((0, 0.5), (np.nan, 0.5), (1, 0.5)))
    with pytest.raises(NonFinite):
        validate_stroke(stroke((0, 0.5), (np.inf, 0.5), (1, 0.5)))


@pytest.mark.parametrize("last_x", [0.0, -0.3])
def test_right_to_left_rejected(last_x):
    with pytest.raises(NotLeftToRight):
        validate_stroke(stroke((0, 0.5), (0.5, 0.8), (last_x, 0.4)))


def test_out_of_canvas_rejected():
    with pytest.raises(OutOfCanvas):
        validate_stroke(stroke((0, 0.5), (0.5, 1.2), (1, 0.5)))
    with pytest.raises(OutOfCanvas):
        validate_stroke(stroke((0, -0.01), (0.5, 0.5), (1, 0.5)))
    # interior x excursions beyond the canvas are also out
    with pytest.raises(OutOfCanvas):
        validate_stroke(stroke((0, 0.5), (1.2, 0.5), (1, 0.6)))


def test_endpoints_snap_to_the_canvas_edges():
    out = validate_stroke(stroke((1e-7, 0.5), (0.5, 0.8), (1 - 1e-7, 0.4)))
    assert out.points[0, 0] == 0.0
    assert out.points[-1, 0] == 1.0
    # beyond the tolerance they stay put and fail canonical validation later
    with pytest.raises(ValueError):
        CanonicalCurve(np.array([[1e-4, 0.5], [1.0, 0.6]]), Canvas())


def test_loops_with_backtracking_interior_x_are_fine():
    # only the endpoints are ordered; the interior may wander left
    out = validate_stroke(stroke((0, 0.5), (0.8, 0.8), (0.2, 0.6), (1, 0.5)))
    assert len(out.points) == 4


def test_wide_canvas_scales_validation():
    cv = Canvas(2.0, 1.0)
    out = validate_stroke(stroke((0, 0.5), (1.5, 0.9), (2.0 - 1e-7, 0.5), canvas=cv))
    assert out.points[-1, 0] == 2.0


# -- canonicalization ------------------------------------------------------------


def test_canonicalize_counts_and_endpoints():
    raw = stroke((0, 0.5), (0.3, 0.9), (0.7, 0.1), (1, 0.5))
    c = canonicalize(raw, 128)
    assert isinstance(c, CanonicalCurve)
    assert c.points.shape == (128, 2)
    assert c.points[0, 0] == 0.0 and c.points[-1, 0] == 1.0
    assert c.canvas == raw.canvas
    d = canonicalize(raw)
    assert d.points.shape == (DEFAULT_SAMPLES, 2)


def test_canonicalize_is_stable_under_repetition(unit_corpus):
    # resampling is not a strict projection (chord lengths shift under
    # curvature), but a second pass moves no point by more than one spacing
    for c in unit_corpus[:10]:
        again = resample(RawStroke(c.points, c.canvas), len(c.points))
        spacing = polyline_length(c.points) / (len(c.points) - 1)
        assert np.array_equal(again.points[[0, -1]], c.points[[0, -1]])
        assert np.abs(again.points - c.points).max() <= spacing


def test_dense_resampling_preserves_arc_length():
    # freehand-scale strokes (<= 64 points) keep their length to <1% at n=512
    checked = 0
    for seed in range(14):
        g = np.random.default_rng(seed)
        pts = synth.fourier_stroke(g, int(g.integers(8, 65)))
        try:
            raw = validate_stroke(RawStroke(pts, Canvas()))
        except NotLeftToRight:     # wiggly draws may start at the right edge
            continue
        c = resample(raw, 512)
        L0 = polyline_length(raw.points)
        assert abs(c.length - L0) / L0 < 0.01
        checked += 1
    assert checked >= 10


def test_bad_sample_counts():
    raw = stroke((0, 0.5), (1, 0.5))
    for n in (-3, 0, 1):
        with pytest.raises(BadSampleCount):
            resample(raw, n)


def test_canonical_curve_equality_and_length():
    a = CanonicalCurve(np.array([[0.0, 0.5], [1.0, 0.5]]), Canvas())
    b = CanonicalCurve(np.array([[0.0, 0.5], [1.0, 0.5]]), Canvas())
    c = CanonicalCurve(np.array([[0.0, 0.5], [1.0, 0.6]]), Canvas())
    assert a == b and a != c
    assert a.length == 1.0


# -- closure ---------------------------------------------------------------------


def test_close_curve_shape():
    c = canonicalize(stroke((0, 0.5), (0.4, 0.9), (1, 0.3)), 32)
    chain = close_curve(c)
    assert isinstance(chain, ClosedChain)
    assert np.array_equal(chain.points[0], chain.points[-1])
    assert chain.curve_count == 32
    # the return path adds four corners outside the canvas
    assert len(chain.points) == 32 + 5
    tail = chain.points[32:, :]
    assert tail[:, 0].max() > 1.0 and tail[:, 1].min() < 0.0


def test_closure_path_never_crosses_the_curve(unit_corpus):
    for c in unit_corpus[:12]:
        chain = close_curve(c)
        n_segs = len(snap_chain(chain)) - 1
        hits = find_intersections(chain)
        for (i, j) in hits:
            # the last five segments are the return path
            assert i < n_segs - 5 and j < n_segs - 5


def test_close_points_returns_to_the_start():
    pts = np.array([[0.0, 0.2], [0.5, 0.8], [1.0, 0.6]])
    chain = close_points(pts, Canvas())
    assert chain.points[-1, 0] == 0.0 and chain.points[-1, 1] == 0.2
