"""Deterministic synthetic closed curves in the plane."""

from __future__ import annotations

import numpy as np

from .geometry import ClosedCurve

KINDS = ("polygon", "star", "noisy-circle")


def generate(kind: str, m: int, seed: int = 0) -> ClosedCurve:
    if m < 1:
        raise ValueError("m must be >= 1")
    rng = np.random.default_rng(seed)
    if kind == "polygon":
        # convex: sorted random angles on the unit circle
        angles = np.sort(rng.uniform(0.0, 2 * np.pi, m))
        radii = np.ones(m)
    elif kind == "star":
        angles = 2 * np.pi * np.arange(m) / m + rng.uniform(0.0, 2 * np.pi)
        radii = np.where(np.arange(m) % 2 == 0, 1.0, 0.4)
    elif kind == "noisy-circle":
        angles = 2 * np.pi * np.arange(m) / m
        radii = 1.0 + rng.normal(0.0, 0.05, m)
    else:
        raise ValueError(f"unknown curve kind {kind!r}; choose from {', '.join(KINDS)}")
    return ClosedCurve(np.column_stack([radii * np.cos(angles), radii * np.sin(angles)]))


def random_curve(rng: np.random.Generator, m: int, dimension: int = 2) -> ClosedCurve:
    """Vertices i.i.d. uniform in the unit square (cube)."""
    return ClosedCurve(rng.random((m, dimension)))
