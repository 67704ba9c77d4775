"""Decision procedure for the closed-curve Frechet distance, plus bisection."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .freespace import BoundaryGrid, ReachGrid, build_boundary_grid, build_reach_grid
from .geometry import ClosedCurve, GeometryError, check_same_dimension, eps_upper_bound
from .pointer_pass import PassCounters, PassResult, run_passes

MAX_BISECTION_STEPS = 200


@dataclass(frozen=True)
class DecisionReport:
    answer: bool
    witness_u: float | None
    eps: float
    m: int
    n: int
    forward: PassCounters | None = None
    backward: PassCounters | None = None
    # intermediate data kept for diagrams and debugging; excluded from equality
    grid: BoundaryGrid | None = field(default=None, repr=False, compare=False)
    reach: ReachGrid | None = field(default=None, repr=False, compare=False)
    passes: PassResult | None = field(default=None, repr=False, compare=False)

    @property
    def pushes(self) -> int:
        return sum(c.pushes for c in (self.forward, self.backward) if c is not None)

    @property
    def pops(self) -> int:
        return sum(c.pops for c in (self.forward, self.backward) if c is not None)

    @property
    def cells(self) -> int:
        return sum(c.cells for c in (self.forward, self.backward) if c is not None)

    def to_dict(self) -> dict:
        return {
            "answer": self.answer,
            "witness_u": self.witness_u,
            "eps": self.eps,
            "m": self.m,
            "n": self.n,
            "pushes": self.pushes,
            "pops": self.pops,
            "cells": self.cells,
        }


@njit(cache=True)
def _find_witness(up_t_lo, up_t_hi, r_up, offsets, triples, m):
    # any i in 1..m and triple in I_down(i + m, n) with
    # max(c_i, beg - m) <= min(d_i, end - m, r_up_i - m, val)
    for i in range(1, m + 1):
        c = up_t_lo[i, 0]
        if np.isnan(c) or np.isnan(r_up[i]):
            continue
        d = up_t_hi[i, 0]
        cap = min(d, r_up[i] - m)
        for k in range(offsets[i + m], offsets[i + m + 1]):
            lo = max(c, triples[k, 0] - m)
            hi = min(cap, min(triples[k, 1] - m, triples[k, 2]))
            if lo <= hi:
                return lo
    return np.nan


def decide(
    x: ClosedCurve, y: ClosedCurve, eps: float, *, check: bool = False, keep: bool = False
) -> DecisionReport:
    """Decide whether the Frechet distance of closed curves ``x`` and ``y`` is at most ``eps``.

    Runs in O(mn) time. ``check=True`` asserts the deque invariants at every
    step; ``keep=True`` retains the grids and pass results on the report.
    """
    check_same_dimension(x, y)
    if not eps >= 0 or not math.isfinite(eps):
        raise GeometryError(f"eps must be a finite non-negative number, got {eps}")
    m, n = x.m, y.m
    grid = build_boundary_grid(x, y, eps)
    if not (grid.bottom_is_free() and grid.top_is_free()):
        return DecisionReport(False, None, eps, m, n, grid=grid if keep else None)

    reach = build_reach_grid(grid)
    passes = run_passes(reach, check=check)
    fwd, bwd = passes.forward, passes.backward
    u = _find_witness(reach.up_t_lo, reach.up_t_hi, bwd.r_up, fwd.offsets, fwd.triples, m)
    found = not np.isnan(u)
    return DecisionReport(
        answer=found,
        witness_u=float(u) if found else None,
        eps=eps,
        m=m,
        n=n,
        forward=fwd.counters,
        backward=bwd.counters,
        grid=grid if keep else None,
        reach=reach if keep else None,
        passes=passes if keep else None,
    )


@dataclass(frozen=True)
class DistanceResult:
    distance: float
    iterations: int
    lower: float
    upper: float


def bisect_distance(x: ClosedCurve, y: ClosedCurve, tol: float) -> DistanceResult:
    """Bisection on ``[0, eps_upper_bound]`` keeping ``decide(upper)`` true."""
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    upper = eps_upper_bound(x, y)
    lower = 0.0
    if decide(x, y, 0.0).answer:
        return DistanceResult(0.0, 0, 0.0, 0.0)
    steps = 0
    if upper > tol:
        steps = min(math.ceil(math.log2(upper / tol)), MAX_BISECTION_STEPS)
    for _ in range(steps):
        mid = 0.5 * (lower + upper)
        if decide(x, y, mid).answer:
            upper = mid
        else:
            lower = mid
    return DistanceResult(upper, steps, lower, upper)


def distance(x: ClosedCurve, y: ClosedCurve, tol: float = 1e-6) -> float:
    """Frechet distance of two closed curves to within ``tol``."""
    return bisect_distance(x, y, tol).distance
