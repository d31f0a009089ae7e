"""Discrete and continuous Fréchet distances between polylines.

The discrete distance is the classic dynamic program over the m*n grid and
also yields a monotone coupling for morphing. The continuous distance is
decided by free-space-diagram reachability and bracketed by binary search
between max endpoint distance and the discrete distance.

Every distance evaluation spells the metric as sqrt(dx*dx + dy*dy) so the
jitted kernels, the batch scan and the fallback paths agree bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyCurve

try:
    from numba import config as _numba_config
    from numba import njit, prange

    # probe omp before tbb: a tbb version mismatch only downgrades the layer
    # anyway, and the probe itself emits a warning
    _numba_config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
    HAVE_NUMBA = True
except ImportError:                                    # pragma: no cover
    HAVE_NUMBA = False
    prange = range

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

# binary-search bracket width: 1e-6 of the unit canvas diagonal
DEFAULT_TOL = 1e-6 * math.sqrt(2.0)

CouplingPair = tuple[int, int]


@dataclass(frozen=True)
class FrechetResult:
    distance: float
    coupling: tuple[CouplingPair, ...]


def _split_xy(points) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        raise EmptyCurve("empty point list")
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("expected an (n, 2) point array")
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


@njit(cache=True)
def _dp_distance_core(ax, ay, bx, by):
    m = ax.shape[0]
    n = bx.shape[0]
    prev = np.empty(n, dtype=np.float64)
    cur = np.empty(n, dtype=np.float64)
    dx = ax[0] - bx[0]
    dy = ay[0] - by[0]
    prev[0] = np.sqrt(dx * dx + dy * dy)
    for j in range(1, n):
        dx = ax[0] - bx[j]
        dy = ay[0] - by[j]
        c = np.sqrt(dx * dx + dy * dy)
        prev[j] = c if c > prev[j - 1] else prev[j - 1]
    for i in range(1, m):
        dx = ax[i] - bx[0]
        dy = ay[i] - by[0]
        c = np.sqrt(dx * dx + dy * dy)
        cur[0] = c if c > prev[0] else prev[0]
        for j in range(1, n):
            dx = ax[i] - bx[j]
            dy = ay[i] - by[j]
            c = np.sqrt(dx * dx + dy * dy)
            mn = prev[j]
            if prev[j - 1] < mn:
                mn = prev[j - 1]
            if cur[j - 1] < mn:
                mn = cur[j - 1]
            cur[j] = c if c > mn else mn
        prev, cur = cur, prev
    return prev[n - 1]


@njit(cache=True)
def _dp_matrix_core(ax, ay, bx, by):
    m = ax.shape[0]
    n = bx.shape[0]
    D = np.empty((m, n), dtype=np.float64)
    dx = ax[0] - bx[0]
    dy = ay[0] - by[0]
    D[0, 0] = np.sqrt(dx * dx + dy * dy)
    for j in range(1, n):
        dx = ax[0] - bx[j]
        dy = ay[0] - by[j]
        c = np.sqrt(dx * dx + dy * dy)
        D[0, j] = c if c > D[0, j - 1] else D[0, j - 1]
    for i in range(1, m):
        dx = ax[i] - bx[0]
        dy = ay[i] - by[0]
        c = np.sqrt(dx * dx + dy * dy)
        D[i, 0] = c if c > D[i - 1, 0] else D[i - 1, 0]
        for j in range(1, n):
            dx = ax[i] - bx[j]
            dy = ay[i] - by[j]
            c = np.sqrt(dx * dx + dy * dy)
            mn = D[i - 1, j]
            if D[i - 1, j - 1] < mn:
                mn = D[i - 1, j - 1]
            if D[i, j - 1] < mn:
                mn = D[i, j - 1]
            D[i, j] = c if c > mn else mn
    return D


@njit(cache=True, parallel=True)
def _dp_distance_rows(qx, qy, px, py, rows):
    out = np.empty(rows.shape[0], dtype=np.float64)
    for k in prange(rows.shape[0]):
        r = rows[k]
        out[k] = _dp_distance_core(qx, qy, px[r], py[r])
    return out


def discrete_frechet_distance(A, B) -> float:
    """Discrete Fréchet distance only (no coupling); the gallery's metric."""
    ax, ay = _split_xy(A)
    bx, by = _split_xy(B)
    return float(_dp_distance_core(ax, ay, bx, by))


def batch_distances(qx: np.ndarray, qy: np.ndarray,
                    px: np.ndarray, py: np.ndarray,
                    rows: np.ndarray) -> np.ndarray:
    """Discrete Fréchet distance from one query to selected pool rows."""
    if rows.size == 0:
        return np.empty(0, dtype=np.float64)
    return _dp_distance_rows(qx, qy, px, py, np.ascontiguousarray(rows, dtype=np.int64))


def discrete_frechet(A, B) -> FrechetResult:
    """Discrete Fréchet distance with one optimal monotone coupling.

    Backtracking walks from (m-1, n-1) to (0, 0), preferring the diagonal
    predecessor, then the i-step, then the j-step among equal minima — the
    same coupling every run.
    """
    ax, ay = _split_xy(A)
    bx, by = _split_xy(B)
    D = _dp_matrix_core(ax, ay, bx, by)
    i, j = D.shape[0] - 1, D.shape[1] - 1
    pairs = [(i, j)]
    while i or j:
        if i and j:
            diag, up, left = D[i - 1, j - 1], D[i - 1, j], D[i, j - 1]
            mn = min(diag, up, left)
            if diag == mn:
                i, j = i - 1, j - 1
            elif up == mn:
                i -= 1
            else:
                j -= 1
        elif i:
            i -= 1
        else:
            j -= 1
        pairs.append((i, j))
    pairs.reverse()
    return FrechetResult(float(D[-1, -1]), tuple(pairs))


# ---------------------------------------------------------------------------
# Continuous distance via free-space reachability


@njit(cache=True)
def _free_interval(p0x, p0y, s0x, s0y, s1x, s1y, e2):
    """Parameter interval of a segment within sqrt(e2) of a point, clipped to [0,1]."""
    dx = s1x - s0x
    dy = s1y - s0y
    fx = s0x - p0x
    fy = s0y - p0y
    a = dx * dx + dy * dy
    b = 2.0 * (dx * fx + dy * fy)
    c = fx * fx + fy * fy - e2
    if a == 0.0:
        if c <= 0.0:
            return 0.0, 1.0
        return 1.0, 0.0
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return 1.0, 0.0
    r = np.sqrt(disc)
    lo = (-b - r) / (2.0 * a)
    hi = (-b + r) / (2.0 * a)
    if lo < 0.0:
        lo = 0.0
    if hi > 1.0:
        hi = 1.0
    return lo, hi


@njit(cache=True)
def _decision_core(ax, ay, bx, by, eps):
    m = ax.shape[0]
    n = bx.shape[0]
    e2 = eps * eps
    if m == 1 or n == 1:
        worst = 0.0
        for i in range(m):
            for j in range(n):
                dx = ax[i] - bx[j]
                dy = ay[i] - by[j]
                d2 = dx * dx + dy * dy
                if d2 > worst:
                    worst = d2
        return worst <= e2

    # free intervals on vertical edges (point A_i vs segment B_j..B_j+1)
    Llo = np.empty((m, n - 1))
    Lhi = np.empty((m, n - 1))
    for i in range(m):
        for j in range(n - 1):
            lo, hi = _free_interval(ax[i], ay[i], bx[j], by[j], bx[j + 1], by[j + 1], e2)
            Llo[i, j] = lo
            Lhi[i, j] = hi
    # free intervals on horizontal edges (point B_j vs segment A_i..A_i+1)
    Blo = np.empty((m - 1, n))
    Bhi = np.empty((m - 1, n))
    for i in range(m - 1):
        for j in range(n):
            lo, hi = _free_interval(bx[j], by[j], ax[i], ay[i], ax[i + 1], ay[i + 1], e2)
            Blo[i, j] = lo
            Bhi[i, j] = hi

    EMPTY_LO, EMPTY_HI = 1.0, 0.0
    RLlo = np.full((m, n - 1), EMPTY_LO)
    RLhi = np.full((m, n - 1), EMPTY_HI)
    RBlo = np.full((m - 1, n), EMPTY_LO)
    RBhi = np.full((m - 1, n), EMPTY_HI)

    # left boundary: a monotone path stuck at s=0 must climb through fully
    # free edges, so each edge must start at 0 and the previous reach 1
    ok = True
    for j in range(n - 1):
        if ok and Llo[0, j] == 0.0 and Lhi[0, j] >= Llo[0, j]:
            RLlo[0, j] = 0.0
            RLhi[0, j] = Lhi[0, j]
            ok = Lhi[0, j] == 1.0
        else:
            ok = False
    ok = True
    for i in range(m - 1):
        if ok and Blo[i, 0] == 0.0 and Bhi[i, 0] >= Blo[i, 0]:
            RBlo[i, 0] = 0.0
            RBhi[i, 0] = Bhi[i, 0]
            ok = Bhi[i, 0] == 1.0
        else:
            ok = False

    for i in range(m - 1):
        for j in range(n - 1):
            left_ok = RLlo[i, j] <= RLhi[i, j]
            bottom_ok = RBlo[i, j] <= RBhi[i, j]
            if bottom_ok:
                RLlo[i + 1, j] = Llo[i + 1, j]
                RLhi[i + 1, j] = Lhi[i + 1, j]
            elif left_ok:
                lo = Llo[i + 1, j]
                if RLlo[i, j] > lo:
                    lo = RLlo[i, j]
                RLlo[i + 1, j] = lo
                RLhi[i + 1, j] = Lhi[i + 1, j]
            if left_ok:
                RBlo[i, j + 1] = Blo[i, j + 1]
                RBhi[i, j + 1] = Bhi[i, j + 1]
            elif bottom_ok:
                lo = Blo[i, j + 1]
                if RBlo[i, j] > lo:
                    lo = RBlo[i, j]
                RBlo[i, j + 1] = lo
                RBhi[i, j + 1] = Bhi[i, j + 1]

    right = RLlo[m - 1, n - 2] <= RLhi[m - 1, n - 2] and RLhi[m - 1, n - 2] == 1.0
    top = RBlo[m - 2, n - 1] <= RBhi[m - 2, n - 1] and RBhi[m - 2, n - 1] == 1.0
    return right or top


def frechet_decision(A, B, eps: float) -> bool:
    """True iff the continuous Fréchet distance between A and B is <= eps."""
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    ax, ay = _split_xy(A)
    bx, by = _split_xy(B)
    return bool(_decision_core(ax, ay, bx, by, float(eps)))


def continuous_frechet(A, B, tol: float = DEFAULT_TOL) -> float:
    """Continuous Fréchet distance to within tol by bisection.

    The bracket starts at [max endpoint distance, discrete distance]; the
    decision procedure halves it until its width is at most tol and the
    midpoint is returned.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    ax, ay = _split_xy(A)
    bx, by = _split_xy(B)
    d0 = math.sqrt((ax[0] - bx[0]) ** 2 + (ay[0] - by[0]) ** 2)
    d1 = math.sqrt((ax[-1] - bx[-1]) ** 2 + (ay[-1] - by[-1]) ** 2)
    lo = max(d0, d1)
    hi = float(_dp_distance_core(ax, ay, bx, by))
    if hi <= lo:
        return hi
    if _decision_core(ax, ay, bx, by, lo):
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _decision_core(ax, ay, bx, by, mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def warm_kernels() -> None:
    """Trigger jit compilation (or cache load) of all kernels."""
    pts = np.array([[0.0, 0.0], [1.0, 0.0]])
    discrete_frechet(pts, pts)
    discrete_frechet_distance(pts, pts)
    frechet_decision(pts, pts, 0.0)
    pool = np.zeros((1, 2), dtype=np.float64)
    batch_distances(pool[0], pool[0], pool, pool, np.array([0], dtype=np.int64))
