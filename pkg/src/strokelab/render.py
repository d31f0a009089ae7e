"""Deterministic SVG rendering of colored drawings.

Output is assembled from fixed-format strings ("%.6f" coordinates, faces
in face-id order), so identical inputs produce byte-identical documents.
The viewport shows the canvas rectangle; face polygons extending to the
closure detour are clipped by the viewport.
"""

from __future__ import annotations

import numpy as np

from .curves import Canvas
from .winding import ColoredDrawing

DEFAULT_SIZE = 512
STROKE_COLOR = "#111111"
STROKE_WIDTH_FRACTION = 0.004      # of the larger canvas side


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _path_data(rings) -> str:
    parts = []
    for ring in rings:
        ring = np.asarray(ring, dtype=float)
        if len(ring) > 1 and ring[0, 0] == ring[-1, 0] and ring[0, 1] == ring[-1, 1]:
            ring = ring[:-1]
        coords = [f"{_fmt(x)},{_fmt(y)}" for x, y in ring]
        parts.append("M " + " L ".join(coords) + " Z")
    return " ".join(parts)


def render_parts(faces, background: str, stroke_points, canvas: Canvas,
                 size: int = DEFAULT_SIZE) -> str:
    """Assemble an SVG from colored faces plus the stroked curve."""
    w, h = canvas
    height = max(1, round(size * h / w))
    sw = STROKE_WIDTH_FRACTION * max(w, h)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{height}" '
        f'viewBox="0 0 {_fmt(w)} {_fmt(h)}">',
        # canvas y grows upward; SVG y grows downward
        f'<g transform="matrix(1 0 0 -1 0 {_fmt(h)})">',
        f'<rect x="0" y="0" width="{_fmt(w)}" height="{_fmt(h)}" fill="{background}"/>',
    ]
    for face in sorted(faces, key=lambda f: f.face_id):
        lines.append(
            f'<path class="face" fill="{face.color}" fill-rule="evenodd" '
            f'd="{_path_data(face.rings)}"/>'
        )
    pts = np.asarray(stroke_points, dtype=float)
    coords = [f"{_fmt(x)},{_fmt(y)}" for x, y in pts]
    lines.append(
        f'<path class="stroke" fill="none" stroke="{STROKE_COLOR}" '
        f'stroke-width="{_fmt(sw)}" stroke-linecap="round" stroke-linejoin="round" '
        f'd="M {" L ".join(coords)}"/>'
    )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(drawing: ColoredDrawing, size: int = DEFAULT_SIZE) -> str:
    return render_parts(drawing.faces, drawing.background,
                        drawing.curve.points, drawing.curve.canvas, size)
