"""Color freehand curves by winding number, compare them by Fréchet
distance, morph between them, and keep them in a searchable gallery."""

from .curves import (
    Canvas,
    CanonicalCurve,
    ClosedChain,
    DEFAULT_SAMPLES,
    RawStroke,
    canonicalize,
    close_curve,
    resample,
    validate_stroke,
)
from .arrangement import Arrangement, build_arrangement, find_intersections
from .errors import StrokelabError, ValidationError
from .frechet import (
    FrechetResult,
    continuous_frechet,
    discrete_frechet,
    discrete_frechet_distance,
    frechet_decision,
)
from .gallery import GalleryRecord, GalleryStats, GalleryStore
from .morph import MorphFrame, make_morph
from .render import render_svg
from .service import ServiceConfig, create_app, serve
from .winding import (
    ColoredDrawing,
    ColoredFace,
    color_curve,
    compute_windings,
    make_palette,
    recolor,
    winding_at_point,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "Canvas",
    "CanonicalCurve",
    "ClosedChain",
    "ColoredDrawing",
    "ColoredFace",
    "DEFAULT_SAMPLES",
    "FrechetResult",
    "GalleryRecord",
    "GalleryStats",
    "GalleryStore",
    "MorphFrame",
    "RawStroke",
    "ServiceConfig",
    "StrokelabError",
    "ValidationError",
    "__version__",
    "build_arrangement",
    "canonicalize",
    "close_curve",
    "color_curve",
    "compute_windings",
    "continuous_frechet",
    "create_app",
    "discrete_frechet",
    "discrete_frechet_distance",
    "find_intersections",
    "frechet_decision",
    "make_morph",
    "make_palette",
    "recolor",
    "render_svg",
    "resample",
    "serve",
    "validate_stroke",
    "winding_at_point",
]
