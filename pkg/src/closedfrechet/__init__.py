"""O(mn) decision procedure for the Frechet distance of closed polygonal curves."""

from .decision import DecisionReport, bisect_distance, decide, distance
from .geometry import (
    ClosedCurve,
    GeometryError,
    Interval,
    curve_point,
    edge_free_interval,
    eps_upper_bound,
)

__all__ = [
    "ClosedCurve",
    "DecisionReport",
    "GeometryError",
    "Interval",
    "bisect_distance",
    "curve_point",
    "decide",
    "distance",
    "edge_free_interval",
    "eps_upper_bound",
]

__version__ = "0.1.0"
