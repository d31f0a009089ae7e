"""HTTP service exposing the drawing pipeline over the gallery store.

Responses use the interchange formats; every error body is
{"error": <module error name>, "detail": ...} with 422 for validation
failures, 404 for unknown ids and 500 for storage/internal failures.
The service holds no state beyond the store, so identical requests against
identical stores yield identical responses.
"""

from __future__ import annotations

from contextlib import asynccontextmanager
from dataclasses import dataclass

from fastapi import Body, FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .curves import DEFAULT_SAMPLES, RawStroke, canonicalize
from .errors import BindFailure, StrokelabError, ValidationError
from .frechet import discrete_frechet
from .gallery import GalleryRecord, GalleryStore, MAX_PAGE_LIMIT
from .interchange import colored_to_obj, drawing_to_obj, morph_to_obj, parse_drawing
from .morph import DEFAULT_FRAMES, make_morph
from .render import render_svg
from .winding import color_curve, make_palette

MAX_MORPH_FRAMES = 240


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8000
    host: str = "127.0.0.1"
    data_path: str = "gallery.jsonl"
    palette_size: int = 8
    cors_origins: tuple[str, ...] = ("*",)

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise BindFailure(f"port {self.port} out of range")


def _not_found(what: str) -> JSONResponse:
    return JSONResponse(status_code=404, content={"error": "NotFound", "detail": what})


def _record_obj(rec: GalleryRecord) -> dict:
    obj = drawing_to_obj(rec.curve.points, rec.curve.canvas, rec.id, rec.created_at)
    obj["summary"] = {
        "endpoints": [list(rec.endpoints[0]), list(rec.endpoints[1])],
        "bbox": list(rec.bbox),
        "winding_hist": {str(w): n for w, n in sorted(rec.winding_hist.items())},
        "length": rec.length,
    }
    return obj


def create_app(store: GalleryStore, palette_size: int = 8,
               cors_origins: tuple[str, ...] = ("*",)) -> FastAPI:
    palette = make_palette(palette_size)

    @asynccontextmanager
    async def lifespan(_app):
        yield
        store.flush()

    app = FastAPI(title="strokelab", lifespan=lifespan)
    if cors_origins:
        app.add_middleware(CORSMiddleware, allow_origins=list(cors_origins),
                           allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(StrokelabError)
    def _domain_error(_request, exc: StrokelabError):
        status = 422 if isinstance(exc, ValidationError) else 500
        return JSONResponse(status_code=status,
                            content={"error": exc.code, "detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    def _request_error(_request, exc: RequestValidationError):
        return JSONResponse(status_code=422,
                            content={"error": "ValidationError", "detail": str(exc)})

    @app.post("/drawings", status_code=201)
    def create_drawing(payload: dict = Body(...)):
        parsed = parse_drawing(payload)
        curve = canonicalize(RawStroke(parsed.points, parsed.canvas), DEFAULT_SAMPLES)
        rec = store.add_drawing(curve, parsed.created_at)
        colored = color_curve(curve, 0, palette)
        return {"record": _record_obj(rec),
                "colored": colored_to_obj(colored.faces, colored.background)}

    @app.get("/drawings")
    def list_drawings(offset: int = 0, limit: int = 50):
        if offset < 0 or not 1 <= limit <= MAX_PAGE_LIMIT:
            raise ValidationError("offset must be >= 0 and limit in [1, 500]")
        page = store.list_drawings(offset, limit)
        return {"total": len(store), "offset": offset,
                "records": [_record_obj(r) for r in page]}

    @app.get("/drawings/{drawing_id}")
    def get_drawing(drawing_id: str, offset: int = 0):
        rec = store.get(drawing_id)
        if rec is None:
            return _not_found(f"drawing {drawing_id}")
        colored = color_curve(rec.curve, offset, palette)
        return {"record": _record_obj(rec),
                "colored": colored_to_obj(colored.faces, colored.background)}

    @app.get("/drawings/{drawing_id}/svg")
    def get_drawing_svg(drawing_id: str, offset: int = 0, size: int = 512):
        rec = store.get(drawing_id)
        if rec is None:
            return _not_found(f"drawing {drawing_id}")
        if not 16 <= size <= 4096:
            raise ValidationError("size must be in [16, 4096]")
        svg = render_svg(color_curve(rec.curve, offset, palette), size)
        return Response(content=svg, media_type="image/svg+xml")

    @app.get("/morph")
    def get_morph(a: str, b: str, frames: int = DEFAULT_FRAMES):
        rec_a = store.get(a)
        if rec_a is None:
            return _not_found(f"drawing {a}")
        rec_b = store.get(b)
        if rec_b is None:
            return _not_found(f"drawing {b}")
        if frames > MAX_MORPH_FRAMES:
            raise ValidationError(f"frames must be <= {MAX_MORPH_FRAMES}")
        seq = make_morph(rec_a.curve, rec_b.curve, frames, palette=palette)
        delta = discrete_frechet(rec_a.curve.points, rec_b.curve.points).distance
        return morph_to_obj(seq, delta)

    @app.get("/nearest")
    def get_nearest(id: str, k: int = 10):
        rec = store.get(id)
        if rec is None:
            return _not_found(f"drawing {id}")
        if not 1 <= k <= 100:
            raise ValidationError("k must be in [1, 100]")
        found = store.nearest(rec.curve, k)
        return {"neighbors": [
            {"record": _record_obj(r), "distance": d} for r, d in found
        ]}

    @app.get("/stats")
    def get_stats():
        s = store.stats()
        return {"count": s.count,
                "max_winding_hist": {str(w): n for w, n in sorted(s.max_winding_hist.items())},
                "mean_length": s.mean_length}

    return app


def serve(config: ServiceConfig) -> None:
    """Run the service until interrupted; flushes the store on the way out."""
    import uvicorn

    store = GalleryStore(config.data_path)
    app = create_app(store, config.palette_size, config.cors_origins)
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    except OSError as exc:
        raise BindFailure(f"cannot bind {config.host}:{config.port}: {exc}") from exc
    finally:
        store.close()
