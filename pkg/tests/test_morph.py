"""Coupling-based morphing between canonical curves."""

import numpy as np
import pytest

from strokelab.curves import Canvas, CanonicalCurve
from strokelab.errors import BadSampleCount, CanvasMismatch
from strokelab.frechet import discrete_frechet_distance
from strokelab.geometry import collapse_consecutive
from strokelab.morph import DEFAULT_FRAMES, MorphFrame, make_morph
from strokelab.winding import make_palette


def test_frame_grid_and_count(unit_corpus):
    a, b = unit_corpus[0], unit_corpus[1]
    frames = make_morph(a, b, 5)
    assert len(frames) == 5
    assert [f.t for f in frames] == [0.0, 0.25, 0.5, 0.75, 1.0]
    default = make_morph(a, b)
    assert len(default) == DEFAULT_FRAMES


def test_endpoint_frames_reproduce_the_inputs(unit_corpus):
    for a, b in zip(unit_corpus[:6], unit_corpus[6:12]):
        frames = make_morph(a, b, 4)
        assert np.array_equal(collapse_consecutive(frames[0].curve), a.points)
        assert np.array_equal(collapse_consecutive(frames[-1].curve), b.points)


def test_intermediate_frames_stay_within_t_delta(unit_corpus):
    for a, b in zip(unit_corpus[:5], unit_corpus[5:10]):
        delta = discrete_frechet_distance(a.points, b.points)
        for frames in (make_morph(a, b, 5),):
            for f in frames:
                da = discrete_frechet_distance(a.points, f.curve)
                db = discrete_frechet_distance(b.points, f.curve)
                assert da <= f.t * delta + 1e-9
                assert db <= (1.0 - f.t) * delta + 1e-9


def test_morph_to_itself_is_static(unit_corpus):
    a = unit_corpus[3]
    for f in make_morph(a, a, 3):
        assert np.array_equal(collapse_consecutive(f.curve), a.points)
        assert f.error is None


def test_frames_carry_coloring(unit_corpus):
    pal = make_palette(4)
    frames = make_morph(unit_corpus[0], unit_corpus[1], 3, offset=1, palette=pal)
    for f in frames:
        assert isinstance(f, MorphFrame)
        if f.error is None:
            assert f.colored is not None
            assert f.background == pal[1]       # winding 0, offset 1
            assert all(c.color in pal for c in f.colored)
        else:
            assert f.colored is None and f.background is None


def test_degenerate_frames_are_flagged_not_fatal():
    # B mirrors A about y = 0.5, so the midframe lands every point on that
    # line while x still backtracks: a collinear retrace, not a drawing
    up = CanonicalCurve(np.array([[0.0, 0.5], [0.7, 0.9], [0.3, 0.9], [1.0, 0.5]]))
    down = CanonicalCurve(np.array([[0.0, 0.5], [0.7, 0.1], [0.3, 0.1], [1.0, 0.5]]))
    frames = make_morph(up, down, 3)
    assert [f.error for f in (frames[0], frames[2])] == [None, None]
    mid = frames[1]
    assert mid.error == "DegenerateOverlap"
    assert mid.colored is None and mid.background is None


def test_too_few_frames():
    c = CanonicalCurve(np.array([[0.0, 0.5], [1.0, 0.5]]))
    with pytest.raises(BadSampleCount):
        make_morph(c, c, 1)


def test_mismatched_canvases_are_rejected():
    a = CanonicalCurve(np.array([[0.0, 0.5], [1.0, 0.5]]), Canvas(1, 1))
    b = CanonicalCurve(np.array([[0.0, 0.5], [2.0, 0.5]]), Canvas(2, 1))
    with pytest.raises(CanvasMismatch):
        make_morph(a, b, 3)
