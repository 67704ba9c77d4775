"""Doubled free-space diagram and reachable-set propagation.

The diagram for closed curves ``X`` (m vertices) and ``Y`` (n vertices) is
the rectangle ``[0, 2m] x [0, n]``: ``X`` is traversed twice so that every
cyclic shift of its starting point becomes a straight path.

Cell borders are stored as dense float arrays indexed ``[i, j]``:

* horizontal edge ``T_ij = [i-1, i] x {j}`` for ``i in 1..2m``, ``j in 0..n``
  (row ``j = 0`` is the bottom side, ``j = n`` the top side);
* vertical edge ``R_ij = {i} x [j-1, j]`` for ``i in 0..2m``, ``j in 1..n``
  (column ``i = 0`` is the left side, ``i = 2m`` the right side).

Both families live in arrays of shape ``(2m + 1, n + 1)``; unused slots and
empty intervals hold NaN in both ``lo`` and ``hi``. Intervals are in absolute
diagram coordinates (u for horizontal edges, v for vertical ones).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .geometry import ClosedCurve, Interval, check_same_dimension, free_intervals


@dataclass(frozen=True)
class BoundaryGrid:
    """Free interval on every cell border of the doubled diagram."""

    m: int
    n: int
    t_lo: np.ndarray
    t_hi: np.ndarray
    r_lo: np.ndarray
    r_hi: np.ndarray

    def free_t(self, i: int, j: int) -> Interval:
        _check_t_index(self.m, self.n, i, j)
        return Interval.from_pair(self.t_lo[i, j], self.t_hi[i, j])

    def free_r(self, i: int, j: int) -> Interval:
        _check_r_index(self.m, self.n, i, j)
        return Interval.from_pair(self.r_lo[i, j], self.r_hi[i, j])

    def bottom_is_free(self) -> bool:
        return bool(np.any(~np.isnan(self.t_lo[1:, 0])))

    def top_is_free(self) -> bool:
        return bool(np.any(~np.isnan(self.t_lo[1:, self.n])))


@dataclass(frozen=True)
class ReachGrid:
    """Parts of the free borders reachable from the bottom (down*) and top (up*)."""

    m: int
    n: int
    down_t_lo: np.ndarray
    down_t_hi: np.ndarray
    down_r_lo: np.ndarray
    down_r_hi: np.ndarray
    up_t_lo: np.ndarray
    up_t_hi: np.ndarray
    up_r_lo: np.ndarray
    up_r_hi: np.ndarray

    def down_t(self, i: int, j: int) -> Interval:
        _check_t_index(self.m, self.n, i, j)
        return Interval.from_pair(self.down_t_lo[i, j], self.down_t_hi[i, j])

    def down_r(self, i: int, j: int) -> Interval:
        _check_r_index(self.m, self.n, i, j)
        return Interval.from_pair(self.down_r_lo[i, j], self.down_r_hi[i, j])

    def up_t(self, i: int, j: int) -> Interval:
        _check_t_index(self.m, self.n, i, j)
        return Interval.from_pair(self.up_t_lo[i, j], self.up_t_hi[i, j])

    def up_r(self, i: int, j: int) -> Interval:
        _check_r_index(self.m, self.n, i, j)
        return Interval.from_pair(self.up_r_lo[i, j], self.up_r_hi[i, j])


def _check_t_index(m, n, i, j):
    if not (1 <= i <= 2 * m and 0 <= j <= n):
        raise IndexError(f"no horizontal edge T[{i}][{j}] in a {2 * m}x{n} diagram")


def _check_r_index(m, n, i, j):
    if not (0 <= i <= 2 * m and 1 <= j <= n):
        raise IndexError(f"no vertical edge R[{i}][{j}] in a {2 * m}x{n} diagram")


def build_boundary_grid(x: ClosedCurve, y: ClosedCurve, eps: float) -> BoundaryGrid:
    check_same_dimension(x, y)
    m, n = x.m, y.m
    xv, yv = x.vertices, y.vertices
    x_next = np.roll(xv, -1, axis=0)
    y_next = np.roll(yv, -1, axis=0)
    y_rows = yv[np.arange(n + 1) % n]

    t_lo = np.full((2 * m + 1, n + 1), np.nan)
    t_hi = np.full((2 * m + 1, n + 1), np.nan)
    # X-edge i-1 -> i against f_Y(j); solved once, placed at u and u + m
    offsets = np.arange(m, dtype=np.float64)[None, :, None] + np.array([0.0, m])[:, None, None]
    lo, hi = free_intervals(
        xv[:, None, :], x_next[:, None, :], y_rows[None, :, :], eps, offsets
    )
    t_lo[1:] = lo.reshape(2 * m, n + 1)
    t_hi[1:] = hi.reshape(2 * m, n + 1)

    r_lo = np.full((2 * m + 1, n + 1), np.nan)
    r_hi = np.full((2 * m + 1, n + 1), np.nan)
    # Y-edge j-1 -> j against x_(i mod m); the v-offsets do not depend on i
    lo, hi = free_intervals(
        yv[None, :, :], y_next[None, :, :], xv[:, None, :], eps,
        np.arange(n, dtype=np.float64)[None, :],
    )
    cols = np.arange(2 * m + 1) % m
    r_lo[:, 1:] = lo[cols]
    r_hi[:, 1:] = hi[cols]
    return BoundaryGrid(m, n, t_lo, t_hi, r_lo, r_hi)


@njit(cache=True)
def _propagate_down(t_lo, t_hi, r_lo, r_hi, m2, n):
    nan = np.nan
    dt_lo = np.full(t_lo.shape, nan)
    dt_hi = np.full(t_lo.shape, nan)
    dr_lo = np.full(r_lo.shape, nan)
    dr_hi = np.full(r_lo.shape, nan)
    for i in range(1, m2 + 1):
        dt_lo[i, 0] = t_lo[i, 0]
        dt_hi[i, 0] = t_hi[i, 0]
    # left side: only the free run climbing from the corner (0, 0)
    for j in range(1, n + 1):
        if r_lo[0, j] != j - 1:
            break
        if j > 1 and dr_hi[0, j - 1] != j - 1:
            break
        dr_lo[0, j] = r_lo[0, j]
        dr_hi[0, j] = r_hi[0, j]

    for j in range(1, n + 1):
        for i in range(1, m2 + 1):
            b_lo = dt_lo[i, j - 1]
            l_lo = dr_lo[i - 1, j]
            has_b = not np.isnan(b_lo)
            has_l = not np.isnan(l_lo)
            f_lo = t_lo[i, j]
            if not np.isnan(f_lo):
                if has_l:
                    dt_lo[i, j] = f_lo
                    dt_hi[i, j] = t_hi[i, j]
                elif has_b:
                    lo = max(f_lo, b_lo)
                    if lo <= t_hi[i, j]:
                        dt_lo[i, j] = lo
                        dt_hi[i, j] = t_hi[i, j]
            f_lo = r_lo[i, j]
            if not np.isnan(f_lo):
                if has_b:
                    dr_lo[i, j] = f_lo
                    dr_hi[i, j] = r_hi[i, j]
                elif has_l:
                    lo = max(f_lo, l_lo)
                    if lo <= r_hi[i, j]:
                        dr_lo[i, j] = lo
                        dr_hi[i, j] = r_hi[i, j]
    return dt_lo, dt_hi, dr_lo, dr_hi


@njit(cache=True)
def _propagate_up(t_lo, t_hi, r_lo, r_hi, m2, n):
    nan = np.nan
    ut_lo = np.full(t_lo.shape, nan)
    ut_hi = np.full(t_lo.shape, nan)
    ur_lo = np.full(r_lo.shape, nan)
    ur_hi = np.full(r_lo.shape, nan)
    for i in range(1, m2 + 1):
        ut_lo[i, n] = t_lo[i, n]
        ut_hi[i, n] = t_hi[i, n]
    # right side: only the free run descending from the corner (2m, n)
    for j in range(n, 0, -1):
        if r_hi[m2, j] != j:
            break
        if j < n and ur_lo[m2, j + 1] != j:
            break
        ur_lo[m2, j] = r_lo[m2, j]
        ur_hi[m2, j] = r_hi[m2, j]

    for j in range(n, 0, -1):
        for i in range(m2, 0, -1):
            t_top_hi = ut_hi[i, j]
            r_right_hi = ur_hi[i, j]
            has_t = not np.isnan(t_top_hi)
            has_r = not np.isnan(r_right_hi)
            f_hi = t_hi[i, j - 1]
            if not np.isnan(f_hi):
                if has_r:
                    ut_lo[i, j - 1] = t_lo[i, j - 1]
                    ut_hi[i, j - 1] = f_hi
                elif has_t:
                    hi = min(f_hi, t_top_hi)
                    if t_lo[i, j - 1] <= hi:
                        ut_lo[i, j - 1] = t_lo[i, j - 1]
                        ut_hi[i, j - 1] = hi
            f_hi = r_hi[i - 1, j]
            if not np.isnan(f_hi):
                if has_t:
                    ur_lo[i - 1, j] = r_lo[i - 1, j]
                    ur_hi[i - 1, j] = f_hi
                elif has_r:
                    hi = min(f_hi, r_right_hi)
                    if r_lo[i - 1, j] <= hi:
                        ur_lo[i - 1, j] = r_lo[i - 1, j]
                        ur_hi[i - 1, j] = hi
    return ut_lo, ut_hi, ur_lo, ur_hi


def propagate_reach_down(g: BoundaryGrid):
    """Reachable-from-bottom sets ``(down_t_lo, down_t_hi, down_r_lo, down_r_hi)``.

    Per cell, with ``B`` and ``L`` the reachable parts of the bottom and left
    borders: the free top border is fully reachable when ``L`` is non-empty
    and reachable right of ``lo(B)`` otherwise; symmetrically for the right
    border. The free cell is convex, so straight segments witness each move.
    """
    return _propagate_down(g.t_lo, g.t_hi, g.r_lo, g.r_hi, 2 * g.m, g.n)


def propagate_reach_up(g: BoundaryGrid):
    """Reachable-from-top sets; the 180-degree mirror of :func:`propagate_reach_down`."""
    return _propagate_up(g.t_lo, g.t_hi, g.r_lo, g.r_hi, 2 * g.m, g.n)


def build_reach_grid(g: BoundaryGrid) -> ReachGrid:
    return ReachGrid(g.m, g.n, *propagate_reach_down(g), *propagate_reach_up(g))


def grid_from_intervals(m: int, n: int, free_t: dict, free_r: dict, default=None) -> BoundaryGrid:
    """Hand-built grid for tests and diagrams.

    ``free_t`` maps ``(i, j)`` to ``(lo, hi)`` or ``None`` (empty); unlisted
    edges get ``default``, where ``"full"`` means the whole edge.
    """
    t_lo = np.full((2 * m + 1, n + 1), np.nan)
    t_hi = np.full((2 * m + 1, n + 1), np.nan)
    r_lo = np.full((2 * m + 1, n + 1), np.nan)
    r_hi = np.full((2 * m + 1, n + 1), np.nan)
    for i in range(1, 2 * m + 1):
        for j in range(n + 1):
            iv = free_t.get((i, j), (i - 1.0, float(i)) if default == "full" else None)
            if iv is not None:
                t_lo[i, j], t_hi[i, j] = iv
    for i in range(2 * m + 1):
        for j in range(1, n + 1):
            iv = free_r.get((i, j), (j - 1.0, float(j)) if default == "full" else None)
            if iv is not None:
                r_lo[i, j], r_hi[i, j] = iv
    return BoundaryGrid(m, n, t_lo, t_hi, r_lo, r_hi)
