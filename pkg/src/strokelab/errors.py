"""Error types shared across the package.

Every error carries a stable ``code`` (its class name) which is what the
HTTP service returns and what the CLI maps to exit status 2 (validation)
or 1 (everything else).
"""

from __future__ import annotations


class StrokelabError(Exception):
    """Base class for all package errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ValidationError(StrokelabError):
    """Bad input data; maps to HTTP 422 and CLI exit code 2."""


class TooFewPoints(ValidationError):
    pass


class NotLeftToRight(ValidationError):
    pass


class NonFinite(ValidationError):
    pass


class OutOfCanvas(ValidationError):
    pass


class BadSampleCount(ValidationError):
    pass


class DegenerateOverlap(ValidationError):
    """Collinear overlapping segments that survive snap rounding."""


class PointOnCurve(ValidationError):
    pass


class EmptyCurve(ValidationError):
    pass


class CanvasMismatch(ValidationError):
    """Operands live on different canvases (e.g. morph endpoints)."""


class StorageFailure(StrokelabError):
    pass


class BindFailure(StrokelabError):
    pass
