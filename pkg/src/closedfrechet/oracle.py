"""Brute-force baselines for validating the O(mn) decision procedure.

Nothing here uses the reach pointers or the deque passes. The naive decision
tries each candidate shift ``u`` separately, propagating reachability from
the single start ``(u, 0)`` over the doubled diagram, which is the textbook
open-curve algorithm repeated O(mn) times.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.spatial.distance import cdist

from .geometry import ClosedCurve, GeometryError, check_same_dimension, free_intervals


@dataclass(frozen=True)
class SampledCurve:
    points: np.ndarray
    spacing: float

    def __len__(self) -> int:
        return len(self.points)


def sample_curve(curve: ClosedCurve, per_edge: int = 64) -> SampledCurve:
    """Uniform samples in the curve parameter, ``per_edge`` per edge, vertices included.

    ``spacing`` bounds the distance between consecutive samples.
    """
    if per_edge < 1:
        raise ValueError("per_edge must be >= 1")
    v = curve.vertices
    alpha = np.arange(per_edge) / per_edge
    nxt = np.roll(v, -1, axis=0)
    pts = (1 - alpha)[None, :, None] * v[:, None, :] + alpha[None, :, None] * nxt[:, None, :]
    pts = pts.reshape(-1, curve.dimension)
    return SampledCurve(pts, float(curve.edge_lengths().max()) / per_edge)


@njit(cache=True)
def _discrete_cyclic(dist):
    sp, sq = dist.shape
    best = np.inf
    row = np.empty(sq + 1)
    for shift in range(sq):
        if dist[0, shift] >= best:
            continue
        # p_0..p_{sp-1}, p_0 against q_shift..q_{shift-1}, q_shift
        for c in range(sq + 1):
            d = dist[0, (shift + c) % sq]
            row[c] = d if c == 0 else max(d, row[c - 1])
        for r in range(1, sp + 1):
            pr = r % sp
            diag = row[0]
            row[0] = max(dist[pr, shift], row[0])
            for c in range(1, sq + 1):
                up = row[c]
                best_prev = min(up, diag, row[c - 1])
                diag = up
                row[c] = max(dist[pr, (shift + c) % sq], best_prev)
        if row[sq] < best:
            best = row[sq]
    return best


def discrete_frechet_cyclic(p: SampledCurve | np.ndarray, q: SampledCurve | np.ndarray) -> float:
    """Discrete Frechet distance of two closed point sequences, minimized over cyclic shifts of ``q``.

    Every closed coupling pairs ``p_0`` with some ``q_s``; fixing that pair at
    both ends and trying all ``s`` gives the exact discrete cyclic value in
    O(|p| |q|^2) time.
    """
    pp = p.points if isinstance(p, SampledCurve) else np.asarray(p, dtype=np.float64)
    qq = q.points if isinstance(q, SampledCurve) else np.asarray(q, dtype=np.float64)
    if len(pp) == 0 or len(qq) == 0:
        raise ValueError("point sequences must be non-empty")
    return float(_discrete_cyclic(cdist(pp, qq)))


# --- doubled free space, built independently of the freespace module -------


def _free_space(x: ClosedCurve, y: ClosedCurve, eps: float):
    m, n = x.m, y.m
    cols = np.arange(2 * m + 1)
    rows = np.arange(n + 1)
    xs = x.vertices[cols % m]
    ys = y.vertices[rows % n]
    t_lo = np.full((2 * m + 1, n + 1), np.nan)
    t_hi = np.full_like(t_lo, np.nan)
    r_lo = np.full_like(t_lo, np.nan)
    r_hi = np.full_like(t_lo, np.nan)
    # every edge solved in place, no reuse between the two copies of X
    t_lo[1:], t_hi[1:] = free_intervals(
        xs[:-1, None], xs[1:, None], ys[None, :], eps, cols[:-1, None].astype(float)
    )
    r_lo[:, 1:], r_hi[:, 1:] = free_intervals(
        ys[None, :-1], ys[None, 1:], xs[:, None], eps, rows[None, :-1].astype(float)
    )
    return t_lo, t_hi, r_lo, r_hi


def _rotated(t_lo, t_hi, r_lo, r_hi):
    """The diagram turned by 180 degrees: (u, v) -> (2m - u, n - v)."""
    m2 = t_lo.shape[0] - 1
    n = t_lo.shape[1] - 1
    rt_lo = np.full_like(t_lo, np.nan)
    rt_hi = np.full_like(t_lo, np.nan)
    rr_lo = np.full_like(t_lo, np.nan)
    rr_hi = np.full_like(t_lo, np.nan)
    rt_lo[1:, :] = m2 - t_hi[m2:0:-1, ::-1]
    rt_hi[1:, :] = m2 - t_lo[m2:0:-1, ::-1]
    rr_lo[:, 1:] = n - r_hi[::-1, n:0:-1]
    rr_hi[:, 1:] = n - r_lo[::-1, n:0:-1]
    return rt_lo, rt_hi, rr_lo, rr_hi


@njit(cache=True)
def _reach_from(t_lo, t_hi, r_lo, r_hi, s):
    """Monotone reachability from the single bottom point ``(s, 0)``.

    Returns reachable intervals on the top side, one per column (NaN if none).
    """
    m2 = t_lo.shape[0] - 1
    n = t_lo.shape[1] - 1
    top_lo = np.full(m2 + 1, np.nan)
    top_hi = np.full(m2 + 1, np.nan)
    i0 = min(int(np.floor(s)) + 1, m2)
    if not (t_lo[i0, 0] <= s <= t_hi[i0, 0]):
        return top_lo, top_hi

    # reachable part of each horizontal edge in the current row (bottom first)
    below_lo = np.full(m2 + 1, np.nan)
    below_hi = np.full(m2 + 1, np.nan)
    below_lo[i0] = s
    below_hi[i0] = t_hi[i0, 0]
    for i in range(i0 + 1, m2 + 1):
        if below_hi[i - 1] == i - 1 and t_lo[i, 0] == i - 1:
            below_lo[i] = t_lo[i, 0]
            below_hi[i] = t_hi[i, 0]
        else:
            break

    # straight up from the start when it sits on a vertical grid line
    on_line = s == i0 - 1
    climb = on_line
    for j in range(1, n + 1):
        left_lo = np.nan
        if climb and r_lo[i0 - 1, j] == j - 1 and (j == 1 or r_hi[i0 - 1, j - 1] == j - 1):
            left_lo = r_lo[i0 - 1, j]
        else:
            climb = False
        row_lo = np.full(m2 + 1, np.nan)
        row_hi = np.full(m2 + 1, np.nan)
        for i in range(i0, m2 + 1):
            from_below = not np.isnan(below_lo[i])
            from_left = not np.isnan(left_lo)
            # top border of cell (i, j)
            if not np.isnan(t_lo[i, j]):
                if from_left:
                    row_lo[i] = t_lo[i, j]
                    row_hi[i] = t_hi[i, j]
                elif from_below and max(t_lo[i, j], below_lo[i]) <= t_hi[i, j]:
                    row_lo[i] = max(t_lo[i, j], below_lo[i])
                    row_hi[i] = t_hi[i, j]
            # right border of cell (i, j) becomes the next cell's left border
            nxt = np.nan
            if not np.isnan(r_lo[i, j]):
                if from_below:
                    nxt = r_lo[i, j]
                elif from_left and max(r_lo[i, j], left_lo) <= r_hi[i, j]:
                    nxt = max(r_lo[i, j], left_lo)
            left_lo = nxt
        below_lo = row_lo
        below_hi = row_hi
    return below_lo, below_hi


@njit(cache=True)
def _any_candidate(t_lo, t_hi, r_lo, r_hi, m, candidates, tol):
    for k in range(candidates.shape[0]):
        u = candidates[k]
        top_lo, top_hi = _reach_from(t_lo, t_hi, r_lo, r_hi, u)
        target = u + m
        for i in range(1, top_lo.shape[0]):
            if top_lo[i] - tol <= target <= top_hi[i] + tol:
                return k
    return -1


def default_candidates(x: ClosedCurve, y: ClosedCurve, eps: float, grid_points: int = 128) -> np.ndarray:
    """Shifts worth trying: every horizontal free-interval endpoint folded into
    ``[0, m]``, the integers, and a uniform grid."""
    m = x.m
    t_lo, t_hi, _, _ = _free_space(x, y, eps)
    ends = np.concatenate([t_lo[1:].ravel(), t_hi[1:].ravel()])
    ends = ends[~np.isnan(ends)]
    folded = np.concatenate([ends[ends <= m], ends[ends >= m] - m])
    grid = np.linspace(0.0, m, grid_points)
    return np.unique(np.concatenate([folded, np.arange(m + 1.0), grid]))


def naive_closed_decide(
    x: ClosedCurve,
    y: ClosedCurve,
    eps: float,
    candidates=None,
    tol: float = 1e-9,
) -> bool:
    """True if some candidate shift ``u`` joins ``(u, 0)`` to ``(u + m, n)``.

    Exact only when the candidate set contains a feasible shift; the default
    set covers every free-interval endpoint, so in practice it fails only for
    ``eps`` within rounding of the true distance.
    """
    check_same_dimension(x, y)
    if candidates is None:
        candidates = default_candidates(x, y, eps)
    cand = np.asarray(candidates, dtype=np.float64)
    if cand.size and (cand.min() < 0 or cand.max() > x.m):
        raise GeometryError(f"candidate shifts must lie in [0, {x.m}]")
    grids = _free_space(x, y, eps)
    return _any_candidate(*grids, x.m, cand, tol) >= 0


def mutually_reachable(x: ClosedCurve, y: ClosedCurve, eps: float, u: float, tol: float = 1e-9) -> bool:
    """Whether ``(u, 0)`` and ``(u + m, n)`` are joined by a monotone path in free space."""
    check_same_dimension(x, y)
    if not 0 <= u <= x.m:
        raise GeometryError(f"shift {u} outside [0, {x.m}]")
    grids = _free_space(x, y, eps)
    return _any_candidate(*grids, x.m, np.array([float(u)]), tol) >= 0


def naive_r_up_bottom(x: ClosedCurve, y: ClosedCurve, eps: float, u: float) -> float | None:
    """Rightmost top point reachable from ``(u, 0)``; None if there is none."""
    top_lo, top_hi = _reach_from(*_free_space(x, y, eps), float(u))
    if np.all(np.isnan(top_hi)):
        return None
    return float(np.nanmax(top_hi))


def naive_r_down_top(x: ClosedCurve, y: ClosedCurve, eps: float, u: float) -> float | None:
    """Rightmost bottom point from which ``(u, n)`` is reachable; None if there is none."""
    m2 = 2 * x.m
    rot = _rotated(*_free_space(x, y, eps))
    top_lo, _ = _reach_from(*rot, m2 - float(u))
    if np.all(np.isnan(top_lo)):
        return None
    return float(m2 - np.nanmin(top_lo))
