"""Closed polygonal curves and the per-edge free-interval solver.

This is the only module that does floating-point root finding. Everything
downstream compares the interval endpoints produced here exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.spatial.distance import cdist


class GeometryError(ValueError):
    """Invalid geometric input (bad dimension, out-of-range parameter, ...)."""


# Relative slack for a slightly negative discriminant at grazing contact.
DISCRIMINANT_TOL = 1e-12


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]``; ``Interval.empty()`` is the empty set."""

    lo: float | None = None
    hi: float | None = None

    def __post_init__(self):
        if (self.lo is None) != (self.hi is None):
            raise ValueError("both endpoints or neither")
        if self.lo is not None:
            if not (np.isfinite(self.lo) and np.isfinite(self.hi)):
                raise ValueError("interval endpoints must be finite")
            if self.lo > self.hi:
                raise ValueError(f"lo={self.lo} > hi={self.hi}")

    @classmethod
    def empty(cls) -> "Interval":
        return cls()

    @classmethod
    def from_pair(cls, lo: float, hi: float) -> "Interval":
        """Build from array storage where NaN marks the empty set."""
        if np.isnan(lo):
            return cls()
        return cls(float(lo), float(hi))

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    def __bool__(self) -> bool:
        return not self.is_empty

    def __contains__(self, x: float) -> bool:
        return not self.is_empty and self.lo <= x <= self.hi

    def issubset(self, other: "Interval", tol: float = 0.0) -> bool:
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return other.lo - tol <= self.lo and self.hi <= other.hi + tol

    def __repr__(self) -> str:
        if self.is_empty:
            return "Interval(empty)"
        return f"Interval({self.lo!r}, {self.hi!r})"


class ClosedCurve:
    """Closed polygonal curve given by its vertices ``x_0 .. x_{m-1}``.

    The closing vertex ``x_m = x_0`` is implicit and not stored. The curve
    is parametrized over ``[0, m]`` by linear interpolation along edges.
    """

    __slots__ = ("_vertices",)

    def __init__(self, vertices: Sequence[Sequence[float]] | np.ndarray):
        v = np.array(vertices, dtype=np.float64)
        if v.ndim == 1 and v.size > 0:
            # a bare sequence of scalars is a curve in R^1
            v = v[:, None]
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise GeometryError(
                "a closed curve needs at least one vertex of dimension >= 1"
            )
        if not np.all(np.isfinite(v)):
            raise GeometryError("vertex coordinates must be finite")
        v.flags.writeable = False
        self._vertices = v

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    @property
    def m(self) -> int:
        return self._vertices.shape[0]

    @property
    def dimension(self) -> int:
        return self._vertices.shape[1]

    def __len__(self) -> int:
        return self.m

    def vertex(self, i: int) -> np.ndarray:
        """Vertex ``x_i`` with the index taken cyclically."""
        return self._vertices[i % self.m]

    def edge_lengths(self) -> np.ndarray:
        v = self._vertices
        return np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)

    def rotated(self, shift: int) -> "ClosedCurve":
        """Same curve, vertex list started at ``x_shift``."""
        return ClosedCurve(np.roll(self._vertices, -shift, axis=0))

    def transformed(self, rotation: np.ndarray, translation) -> "ClosedCurve":
        return ClosedCurve(self._vertices @ np.asarray(rotation).T + translation)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedCurve):
            return NotImplemented
        return np.array_equal(self._vertices, other._vertices)

    def __hash__(self) -> int:
        return hash(self._vertices.tobytes())

    def __repr__(self) -> str:
        return f"ClosedCurve(m={self.m}, dimension={self.dimension})"


def check_same_dimension(x: ClosedCurve, y: ClosedCurve) -> None:
    if x.dimension != y.dimension:
        raise GeometryError(
            f"dimension mismatch: {x.dimension} vs {y.dimension}"
        )


def curve_point(curve: ClosedCurve, t: float) -> np.ndarray:
    """Evaluate the curve at parameter ``t`` in ``[0, m]``."""
    m = curve.m
    if not (0.0 <= t <= m):
        raise GeometryError(f"parameter {t} outside [0, {m}]")
    i = min(int(np.floor(t)), m - 1)
    alpha = t - i
    return (1.0 - alpha) * curve.vertex(i) + alpha * curve.vertex(i + 1)


def free_intervals(starts, ends, centers, eps: float, offsets=0.0):
    """Vectorized free intervals of segments against points.

    For each segment ``start -> end`` and point ``center`` (arrays of shape
    ``(..., k)``), solve ``|start + t (end - start) - center| <= eps`` for
    ``t`` in ``[0, 1]`` and return absolute coordinates ``offset + t`` as two
    arrays ``(lo, hi)``. Empty intervals are NaN in both arrays.

    ``offsets`` broadcasts against the batch shape, so the same solutions can
    be placed at several positions without solving twice.

    Segment endpoints are classified by a direct distance test rather than by
    the roots: ``lo == offset`` exactly when the start point is within
    ``eps`` and ``hi == offset + 1`` exactly when the end point is. Two edges
    sharing a vertex therefore always agree on it.
    """
    if eps < 0 or not np.isfinite(eps):
        raise GeometryError(f"eps must be a finite non-negative number, got {eps}")
    a = np.asarray(starts, dtype=np.float64)
    b = np.asarray(ends, dtype=np.float64)
    c = np.asarray(centers, dtype=np.float64)
    if not (a.shape[-1] == b.shape[-1] == c.shape[-1]):
        raise GeometryError("dimension mismatch between segment and point")

    d = b - a
    w = a - c
    eps2 = eps * eps
    length2 = np.einsum("...k,...k->...", d, d)
    dot = np.einsum("...k,...k->...", d, w)
    w2 = np.einsum("...k,...k->...", w, w)
    e = b - c
    e2 = np.einsum("...k,...k->...", e, e)
    start_in = w2 <= eps2
    end_in = e2 <= eps2

    degenerate = length2 == 0.0
    safe_len2 = np.where(degenerate, 1.0, length2)
    t0 = -dot / safe_len2
    foot = w + t0[..., None] * d
    perp2 = np.einsum("...k,...k->...", foot, foot)
    disc = eps2 - perp2
    scale2 = np.maximum(np.maximum(eps2, w2), length2)
    disc = np.where((disc < 0) & (disc >= -DISCRIMINANT_TOL * scale2), 0.0, disc)
    hit = (disc >= 0) & ~degenerate
    half = np.sqrt(np.where(hit, disc, 0.0) / safe_len2)

    lo_t = np.where(hit, np.maximum(t0 - half, 0.0), np.inf)
    hi_t = np.where(hit, np.minimum(t0 + half, 1.0), -np.inf)
    # zero-length edge: the inequality does not depend on t
    lo_t = np.where(degenerate, np.where(start_in, 0.0, np.inf), lo_t)
    hi_t = np.where(degenerate, np.where(start_in, 1.0, -np.inf), hi_t)
    lo_t = np.where(start_in, 0.0, lo_t)
    hi_t = np.where(start_in, np.maximum(hi_t, 0.0), hi_t)
    hi_t = np.where(end_in, 1.0, hi_t)
    lo_t = np.where(end_in, np.minimum(lo_t, 1.0), lo_t)

    off = np.asarray(offsets, dtype=np.float64)
    first = off + np.zeros_like(lo_t)
    last = first + 1.0
    lo = off + lo_t
    hi = off + hi_t
    lo = np.where(start_in, first, lo)
    hi = np.where(end_in, last, hi)
    # a vertex outside the eps-ball must stay outside after placement
    lo = np.where(~start_in & (lo <= first), np.nextafter(first, last), lo)
    hi = np.where(~end_in & (hi >= last), np.nextafter(last, first), hi)
    empty = ~(lo <= hi)
    lo = np.where(empty, np.nan, lo)
    hi = np.where(empty, np.nan, hi)
    return lo, hi


def edge_free_interval(a, b, c, eps: float) -> Interval:
    """Parameters ``t`` in ``[0, 1]`` where ``a + t (b - a)`` is within ``eps`` of ``c``."""
    a, b, c = (np.atleast_1d(np.asarray(p, dtype=np.float64)) for p in (a, b, c))
    if not (a.shape == b.shape == c.shape) or a.ndim != 1:
        raise GeometryError("points must share one dimension")
    lo, hi = free_intervals(a, b, c, eps)
    return Interval.from_pair(float(lo), float(hi))


def eps_upper_bound(x: ClosedCurve, y: ClosedCurve) -> float:
    """Largest vertex-to-vertex distance, an upper bound on the distance.

    The distance between two points moving along a pair of segments is
    convex, so its maximum sits at a pair of segment endpoints.
    """
    check_same_dimension(x, y)
    return float(cdist(x.vertices, y.vertices).max())
