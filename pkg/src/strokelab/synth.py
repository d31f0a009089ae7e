"""Seeded synthetic strokes for tests, benchmarks and gallery seeding.

Strokes are short Fourier series over a left-to-right ramp, normalized
into the canvas. With a large x-wiggle the ramp backtracks and the curve
self-intersects, which is what the winding tests want; with a small one
the curves stay simple and cheap, which is what the 20k-scale corpus wants.
"""

from __future__ import annotations

import numpy as np

from .curves import Canvas, CanonicalCurve, DEFAULT_SAMPLES, RawStroke, canonicalize
from .errors import ValidationError


def fourier_stroke(rng: np.random.Generator, n: int, canvas: Canvas = Canvas(),
                   x_wiggle: float = 0.35, y_margin: float = 0.06,
                   harmonics: int = 4) -> np.ndarray:
    """One raw stroke of n points; larger x_wiggle means more loops."""
    t = np.linspace(0.0, 1.0, n)
    x = t.copy()
    y = np.zeros(n)
    for k in range(1, harmonics + 1):
        ax, ay = rng.normal(0.0, 1.0 / k, 2)
        px, py = rng.uniform(0.0, 2.0 * np.pi, 2)
        x += x_wiggle * ax * np.sin(np.pi * k * t + px)
        y += ay * np.sin(np.pi * k * t + py)
    # normalize into the canvas, keeping a vertical margin
    x = (x - x.min()) / max(x.max() - x.min(), 1e-9) * canvas.w
    yspan = max(y.max() - y.min(), 1e-9)
    y = y_margin * canvas.h + (y - y.min()) / yspan * (1 - 2 * y_margin) * canvas.h
    return np.column_stack((x, y))


def random_canonical(rng: np.random.Generator,
                     input_points: tuple[int, int] = (64, 512),
                     samples: int = DEFAULT_SAMPLES,
                     canvas: Canvas = Canvas(),
                     x_wiggle: float = 0.35,
                     max_tries: int = 16) -> CanonicalCurve:
    """A random canonical curve; regenerates when a draw fails validation."""
    for _ in range(max_tries):
        n = int(rng.integers(input_points[0], input_points[1] + 1))
        pts = fourier_stroke(rng, n, canvas, x_wiggle=x_wiggle)
        try:
            return canonicalize(RawStroke(pts, canvas), samples)
        except ValidationError:
            continue
    raise AssertionError("synthetic stroke generation kept failing validation")


def corpus(count: int, seed: int,
           input_points: tuple[int, int] = (64, 512),
           samples: int = DEFAULT_SAMPLES,
           x_wiggle: float = 0.35) -> list[CanonicalCurve]:
    """Deterministic list of random canonical curves."""
    rng = np.random.default_rng(seed)
    return [random_canonical(rng, input_points, samples, x_wiggle=x_wiggle)
            for _ in range(count)]
