"""Persistent drawing gallery with pruned nearest-neighbor search.

Storage is one append-only text log, one drawing per line in the
interchange format; the in-memory index (summaries plus dense resampled
coordinate caches for the metric) is a pure fold of that log, so reloading
the file reproduces it exactly.

nearest() is a linear scan in lower-bound order. A record may be skipped
only when its bound strictly exceeds the current k-th best distance; both
bounds (max endpoint distance, bounding-box separation) never exceed the
true discrete Fréchet distance, so the pruned scan returns exactly the
naive ranking.
"""

from __future__ import annotations

import heapq
import os
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import frechet
from .curves import CanonicalCurve, DEFAULT_SAMPLES, close_curve
from .arrangement import build_arrangement
from .errors import StorageFailure, ValidationError
from .geometry import polyline_length, resample_points
from .interchange import drawing_to_line, parse_drawing_text
from .winding import compute_windings

MAX_PAGE_LIMIT = 500
_SCAN_BLOCK = 512


@dataclass(frozen=True, eq=False)
class GalleryRecord:
    id: str
    curve: CanonicalCurve
    created_at: str
    endpoints: tuple[tuple[float, float], tuple[float, float]]
    bbox: tuple[float, float, float, float]          # xmin, ymin, xmax, ymax
    winding_hist: dict[int, int]                     # bounded faces by winding
    length: float

    @property
    def max_abs_winding(self) -> int:
        return max(abs(w) for w in self.winding_hist)


@dataclass(frozen=True)
class GalleryStats:
    count: int
    max_winding_hist: dict[int, int]
    mean_length: float


def summarize(curve: CanonicalCurve) -> tuple[dict[int, int], float]:
    """(winding histogram of bounded faces, arc length) for one curve."""
    arr = build_arrangement(close_curve(curve))
    windings = compute_windings(arr)
    hist: dict[int, int] = {}
    for f in arr.bounded_faces():
        w = windings[f.id]
        hist[w] = hist.get(w, 0) + 1
    return hist, curve.length


class GalleryStore:
    """Single-writer gallery over one log file.

    Mutations take the store lock; reads take it only long enough to
    snapshot the index arrays, so queries never block adds for long.
    """

    def __init__(self, path: str | os.PathLike, metric_samples: int = DEFAULT_SAMPLES):
        self.path = Path(path)
        self.metric_samples = metric_samples
        self._lock = threading.Lock()
        self._records: list[GalleryRecord] = []
        self._rows_x: list[np.ndarray] = []       # metric cache, one row per record
        self._rows_y: list[np.ndarray] = []
        self._stack: tuple[np.ndarray, ...] | None = None
        frechet.warm_kernels()
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            if self.path.exists():
                self._replay()
            self._log = open(self.path, "a", encoding="utf-8")
        except OSError as exc:
            raise StorageFailure(f"cannot open gallery log {self.path}: {exc}") from exc

    # -- log plumbing -------------------------------------------------------

    def _replay(self) -> None:
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    parsed = parse_drawing_text(line)
                    curve = CanonicalCurve(parsed.points, parsed.canvas)
                except (ValidationError, ValueError) as exc:
                    raise StorageFailure(
                        f"{self.path}:{lineno}: bad gallery record: {exc}") from exc
                if parsed.id is None:
                    raise StorageFailure(f"{self.path}:{lineno}: record without id")
                self._index(parsed.id, curve, parsed.created_at or "")

    def _index(self, record_id: str, curve: CanonicalCurve, created_at: str) -> GalleryRecord:
        pts = curve.points
        if len(pts) == self.metric_samples:
            cache = pts
        else:
            cache = resample_points(pts, self.metric_samples)
        hist, length = summarize(curve)
        rec = GalleryRecord(
            record_id, curve, created_at,
            ((float(pts[0, 0]), float(pts[0, 1])), (float(pts[-1, 0]), float(pts[-1, 1]))),
            (float(cache[:, 0].min()), float(cache[:, 1].min()),
             float(cache[:, 0].max()), float(cache[:, 1].max())),
            hist, length,
        )
        self._records.append(rec)
        self._rows_x.append(np.ascontiguousarray(cache[:, 0]))
        self._rows_y.append(np.ascontiguousarray(cache[:, 1]))
        self._stack = None
        return rec

    def _append_line(self, rec: GalleryRecord) -> None:
        line = drawing_to_line(rec.curve.points, rec.curve.canvas, rec.id, rec.created_at)
        try:
            self._log.write(line + "\n")
        except OSError as exc:
            raise StorageFailure(f"write to {self.path} failed: {exc}") from exc

    def _fsync(self) -> None:
        try:
            self._log.flush()
            os.fsync(self._log.fileno())
        except OSError as exc:
            raise StorageFailure(f"fsync of {self.path} failed: {exc}") from exc

    def flush(self) -> None:
        with self._lock:
            self._fsync()

    def close(self) -> None:
        with self._lock:
            if not self._log.closed:
                self._fsync()
                self._log.close()

    # -- writes -------------------------------------------------------------

    def add_drawing(self, curve: CanonicalCurve,
                    created_at: str | None = None) -> GalleryRecord:
        """Append one drawing; durable (fsynced) before returning."""
        with self._lock:
            rec = self._index(self._next_id(), curve,
                              created_at or _now_rfc3339())
            self._append_line(rec)
            self._fsync()
            return rec

    def add_drawings(self, curves, created_at: str | None = None) -> list[GalleryRecord]:
        """Bulk append with a single fsync after the batch."""
        with self._lock:
            out = []
            stamp = created_at or _now_rfc3339()
            for curve in curves:
                rec = self._index(self._next_id(), curve, stamp)
                self._append_line(rec)
                out.append(rec)
            self._fsync()
            return out

    def _next_id(self) -> str:
        return f"{len(self._records) + 1:06d}"

    # -- reads --------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._records)

    def get(self, record_id: str) -> GalleryRecord | None:
        with self._lock:
            for rec in self._records:
                if rec.id == record_id:
                    return rec
        return None

    def list_drawings(self, offset: int, limit: int) -> list[GalleryRecord]:
        if offset < 0:
            raise ValueError("offset must be >= 0")
        if not 1 <= limit <= MAX_PAGE_LIMIT:
            raise ValueError(f"limit must be in [1, {MAX_PAGE_LIMIT}]")
        with self._lock:
            return self._records[offset:offset + limit]

    def stats(self) -> GalleryStats:
        with self._lock:
            records = list(self._records)
        hist: dict[int, int] = {}
        for rec in records:
            m = rec.max_abs_winding
            hist[m] = hist.get(m, 0) + 1
        mean = sum(r.length for r in records) / len(records) if records else 0.0
        return GalleryStats(len(records), hist, mean)

    # -- nearest neighbors ---------------------------------------------------

    def _snapshot(self):
        with self._lock:
            if self._stack is None or self._stack[0].shape[0] != len(self._records):
                px = np.vstack(self._rows_x) if self._rows_x else np.empty((0, self.metric_samples))
                py = np.vstack(self._rows_y) if self._rows_y else np.empty((0, self.metric_samples))
                e0 = np.array([r.endpoints[0] for r in self._records]).reshape(-1, 2)
                e1 = np.array([r.endpoints[1] for r in self._records]).reshape(-1, 2)
                boxes = np.array([r.bbox for r in self._records]).reshape(-1, 4)
                self._stack = (px, py, e0, e1, boxes)
            return list(self._records), self._stack

    def _query_rows(self, query: CanonicalCurve) -> tuple[np.ndarray, np.ndarray]:
        pts = query.points
        if len(pts) != self.metric_samples:
            pts = resample_points(pts, self.metric_samples)
        return np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])

    def _lower_bounds(self, qx, qy, e0, e1, boxes) -> np.ndarray:
        d0 = np.sqrt((e0[:, 0] - qx[0]) ** 2 + (e0[:, 1] - qy[0]) ** 2)
        d1 = np.sqrt((e1[:, 0] - qx[-1]) ** 2 + (e1[:, 1] - qy[-1]) ** 2)
        ends = np.maximum(d0, d1)
        qxmin, qxmax = qx.min(), qx.max()
        qymin, qymax = qy.min(), qy.max()
        gapx = np.maximum(0.0, np.maximum(boxes[:, 0] - qxmax, qxmin - boxes[:, 2]))
        gapy = np.maximum(0.0, np.maximum(boxes[:, 1] - qymax, qymin - boxes[:, 3]))
        boxsep = np.sqrt(gapx * gapx + gapy * gapy)
        return np.maximum(ends, boxsep)

    def nearest(self, query: CanonicalCurve, k: int) -> list[tuple[GalleryRecord, float]]:
        """k closest records by discrete Fréchet distance, ties by id.

        Scans records in ascending lower-bound order in blocks; once the
        next block's bound strictly exceeds the current k-th best true
        distance, everything after it is pruned.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        records, (px, py, e0, e1, boxes) = self._snapshot()
        if not records:
            return []
        qx, qy = self._query_rows(query)
        bounds = self._lower_bounds(qx, qy, e0, e1, boxes)
        order = np.argsort(bounds, kind="stable")

        heap: list[float] = []          # max-heap (negated) of best-k distances
        results: list[tuple[float, int]] = []
        for start in range(0, len(order), _SCAN_BLOCK):
            block = order[start:start + _SCAN_BLOCK]
            if len(heap) == k and bounds[block[0]] > -heap[0]:
                break
            dists = frechet.batch_distances(qx, qy, px, py, block)
            for idx, dist in zip(block, dists):
                results.append((float(dist), int(idx)))
                if len(heap) < k:
                    heapq.heappush(heap, -float(dist))
                elif dist < -heap[0]:
                    heapq.heapreplace(heap, -float(dist))
        results.sort()
        return [(records[idx], dist) for dist, idx in results[:k]]

    def naive_nearest(self, query: CanonicalCurve, k: int) -> list[tuple[GalleryRecord, float]]:
        """Prune-free linear scan; the oracle nearest() must match."""
        if k < 1:
            raise ValueError("k must be >= 1")
        records, (px, py, _e0, _e1, _boxes) = self._snapshot()
        if not records:
            return []
        qx, qy = self._query_rows(query)
        rows = np.arange(len(records), dtype=np.int64)
        dists = frechet.batch_distances(qx, qy, px, py, rows)
        order = np.lexsort((rows, dists))[:k]
        return [(records[int(i)], float(dists[i])) for i in order]


def _now_rfc3339() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


def load_store(path: str | os.PathLike, metric_samples: int = DEFAULT_SAMPLES) -> GalleryStore:
    return GalleryStore(path, metric_samples)

