"""Command-line interface.

Exit codes: 0 on success, 2 on validation errors (bad strokes, bad
arguments in drawing files), 1 on anything else.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .curves import CanonicalCurve, DEFAULT_SAMPLES, RawStroke, canonicalize
from .errors import StrokelabError, ValidationError
from .frechet import DEFAULT_TOL, continuous_frechet, discrete_frechet
from .gallery import GalleryStore
from .interchange import drawing_to_obj, morph_to_obj, parse_drawing_text
from .morph import DEFAULT_FRAMES, make_morph
from .render import render_parts, render_svg
from .service import ServiceConfig, serve
from .synth import corpus
from .winding import color_curve


def _fail(exc: BaseException) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2 if isinstance(exc, ValidationError) else 1)


def _load_curve(path: str, samples: int = DEFAULT_SAMPLES) -> CanonicalCurve:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    parsed = parse_drawing_text(text)
    return canonicalize(RawStroke(parsed.points, parsed.canvas), samples)


@click.group()
def main() -> None:
    """Color, compare, morph and collect left-to-right drawings."""


@main.command()
@click.argument("drawing", type=str)
@click.option("-o", "--output", "output", required=True, type=click.Path(dir_okay=False))
@click.option("--offset", default=0, show_default=True, help="Palette rotation offset.")
@click.option("--size", default=512, show_default=True, help="Rendered width in pixels.")
def color(drawing: str, output: str, offset: int, size: int) -> None:
    """Color a drawing file (or - for stdin) and write an SVG."""
    try:
        curve = _load_curve(drawing)
        svg = render_svg(color_curve(curve, offset), size)
        Path(output).write_text(svg, encoding="utf-8")
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    click.echo(output)


@main.command()
@click.argument("a", type=str)
@click.argument("b", type=str)
@click.option("--continuous", is_flag=True, help="Continuous distance instead of discrete.")
@click.option("--tol", default=DEFAULT_TOL, show_default=True,
              help="Bracket width for the continuous distance.")
def frechet(a: str, b: str, continuous: bool, tol: float) -> None:
    """Print the Fréchet distance between two drawing files."""
    try:
        ca, cb = _load_curve(a), _load_curve(b)
        if continuous:
            value = continuous_frechet(ca.points, cb.points, tol)
        else:
            value = discrete_frechet(ca.points, cb.points).distance
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    click.echo(repr(value))


@main.command()
@click.argument("a", type=str)
@click.argument("b", type=str)
@click.option("--frames", default=DEFAULT_FRAMES, show_default=True)
@click.option("-o", "--output", "output", required=True, type=click.Path(file_okay=False))
def morph(a: str, b: str, frames: int, output: str) -> None:
    """Write morph frames (SVG) plus morph.json into a directory."""
    try:
        ca, cb = _load_curve(a), _load_curve(b)
        seq = make_morph(ca, cb, frames)
        delta = discrete_frechet(ca.points, cb.points).distance
        out = Path(output)
        out.mkdir(parents=True, exist_ok=True)
        for i, frame in enumerate(seq):
            if frame.error is None:
                svg = render_parts(frame.colored, frame.background,
                                   frame.curve, ca.canvas)
                (out / f"frame_{i:03d}.svg").write_text(svg, encoding="utf-8")
        (out / "morph.json").write_text(
            json.dumps(morph_to_obj(seq, delta)) + "\n", encoding="utf-8")
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    click.echo(str(out))


@main.group()
@click.option("--data", default="gallery.jsonl", show_default=True,
              type=click.Path(dir_okay=False), help="Gallery log path.")
@click.pass_context
def gallery(ctx: click.Context, data: str) -> None:
    """Operate on the drawing gallery."""
    ctx.obj = data


def _open_store(ctx: click.Context) -> GalleryStore:
    return GalleryStore(ctx.obj)


@gallery.command("add")
@click.argument("drawing", type=str)
@click.pass_context
def gallery_add(ctx: click.Context, drawing: str) -> None:
    """Validate, canonicalize and store a drawing; prints its id."""
    try:
        curve = _load_curve(drawing)
        store = _open_store(ctx)
        try:
            rec = store.add_drawing(curve)
        finally:
            store.close()
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    click.echo(rec.id)


@gallery.command("list")
@click.option("--offset", default=0, show_default=True)
@click.option("--limit", default=20, show_default=True)
@click.pass_context
def gallery_list(ctx: click.Context, offset: int, limit: int) -> None:
    """List stored drawings as interchange JSON lines."""
    try:
        store = _open_store(ctx)
        try:
            page = store.list_drawings(offset, limit)
        finally:
            store.close()
        for rec in page:
            click.echo(json.dumps(drawing_to_obj(
                rec.curve.points, rec.curve.canvas, rec.id, rec.created_at)))
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except (StrokelabError, OSError) as exc:
        _fail(exc)


@gallery.command("nearest")
@click.argument("drawing", type=str)
@click.option("-k", default=10, show_default=True)
@click.pass_context
def gallery_nearest(ctx: click.Context, drawing: str, k: int) -> None:
    """Print the k nearest stored drawings to a query drawing file."""
    try:
        curve = _load_curve(drawing)
        store = _open_store(ctx)
        try:
            found = store.nearest(curve, k)
        finally:
            store.close()
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    for rec, dist in found:
        click.echo(f"{rec.id}\t{dist!r}")


@gallery.command("stats")
@click.pass_context
def gallery_stats(ctx: click.Context) -> None:
    """Print corpus statistics as JSON."""
    try:
        store = _open_store(ctx)
        try:
            s = store.stats()
        finally:
            store.close()
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    click.echo(json.dumps({
        "count": s.count,
        "max_winding_hist": {str(w): n for w, n in sorted(s.max_winding_hist.items())},
        "mean_length": s.mean_length,
    }))


@gallery.command("seed")
@click.option("--count", default=100, show_default=True)
@click.option("--seed", default=7, show_default=True)
@click.pass_context
def gallery_seed(ctx: click.Context, count: int, seed: int) -> None:
    """Fill the gallery with synthetic drawings (for demos and benchmarks)."""
    try:
        store = _open_store(ctx)
        try:
            records = store.add_drawings(corpus(count, seed))
        finally:
            store.close()
    except (StrokelabError, OSError) as exc:
        _fail(exc)
    click.echo(f"{records[0].id}..{records[-1].id}" if records else "no drawings added")


@main.command("serve")
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data", default="gallery.jsonl", show_default=True,
              type=click.Path(dir_okay=False))
def serve_cmd(port: int, host: str, data: str) -> None:
    """Run the HTTP service."""
    try:
        serve(ServiceConfig(port=port, host=host, data_path=data))
    except (StrokelabError, OSError) as exc:
        _fail(exc)


if __name__ == "__main__":
    main()
