"""Morphing between two drawings along an optimal Fréchet coupling.

Each frame linearly interpolates the coupled point pairs at its time t, so
the endpoint frames reproduce the inputs (up to consecutive duplicates from
the coupling) and every intermediate frame stays within t*delta of A and
(1-t)*delta of B under the discrete metric. Frames are recolored
independently; winding structure may jump between frames, which is the
point of watching the morph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arrangement import build_arrangement
from .curves import CanonicalCurve, close_points
from .errors import BadSampleCount, CanvasMismatch, StrokelabError
from .frechet import discrete_frechet
from .geometry import collapse_consecutive
from .winding import ColoredFace, color_for, colored_faces, compute_windings, make_palette

DEFAULT_FRAMES = 24


@dataclass(frozen=True, eq=False)
class MorphFrame:
    t: float
    curve: np.ndarray                          # (L, 2): one point per coupling pair
    colored: tuple[ColoredFace, ...] | None    # None when coloring failed
    background: str | None
    error: str | None                          # error code for a failed frame


def make_morph(a: CanonicalCurve, b: CanonicalCurve, frames: int = DEFAULT_FRAMES,
               offset: int = 0, palette: tuple[str, ...] | None = None) -> list[MorphFrame]:
    """Frames at t = k/(frames-1) interpolating a toward b along a coupling.

    A frame whose interpolated curve cannot be arranged (degenerate overlap
    under snapping) is flagged with its error code instead of aborting the
    whole morph.
    """
    if frames < 2:
        raise BadSampleCount(f"a morph needs at least 2 frames, got {frames}")
    if a.canvas != b.canvas:
        raise CanvasMismatch("morph endpoints must share a canvas")
    pal = palette if palette is not None else make_palette()

    result = discrete_frechet(a.points, b.points)
    ii = np.array([p[0] for p in result.coupling])
    jj = np.array([p[1] for p in result.coupling])
    pa = a.points[ii]
    pb = b.points[jj]

    out: list[MorphFrame] = []
    for k in range(frames):
        t = k / (frames - 1)
        pts = (1.0 - t) * pa + t * pb
        try:
            chain = close_points(collapse_consecutive(pts), a.canvas)
            arr = build_arrangement(chain)
            windings = compute_windings(arr)
            out.append(MorphFrame(t, pts,
                                  colored_faces(arr, windings, offset, pal),
                                  color_for(0, offset, pal), None))
        except StrokelabError as exc:
            out.append(MorphFrame(t, pts, None, None, exc.code))
    return out
