"""Benchmark harness: timing and push/deque-length instrumentation on random curves."""

from __future__ import annotations

import csv
import io
import time

import numpy as np
from scipy.spatial.distance import cdist

from .decision import decide
from .synth import random_curve

COLUMNS = [
    "m", "n", "trial", "eps", "answer",
    "pushes_forward", "pushes_backward", "push_ratio",
    "max_len_forward", "bound_forward", "max_len_backward", "bound_backward",
]


def median_vertex_distance(x, y) -> float:
    return float(np.median(cdist(x.vertices, y.vertices)))


def run_bench(sizes, trials: int, seed: int, timing: bool = True) -> list[dict]:
    """One row per (size, trial); ``eps`` is the median vertex-pair distance."""
    rng = np.random.default_rng(seed)
    rows = []
    for m, n in sizes:
        if m < 1 or n < 1:
            raise ValueError(f"sizes must be positive, got {m}x{n}")
        for trial in range(trials):
            x, y = random_curve(rng, m), random_curve(rng, n)
            eps = median_vertex_distance(x, y)
            start = time.perf_counter()
            report = decide(x, y, eps)
            elapsed = time.perf_counter() - start
            fwd, bwd = report.forward, report.backward
            pf = fwd.pushes if fwd else 0
            pb = bwd.pushes if bwd else 0
            row = {
                "m": m,
                "n": n,
                "trial": trial,
                "eps": repr(eps),
                "answer": int(report.answer),
                "pushes_forward": pf,
                "pushes_backward": pb,
                "push_ratio": f"{max(pf, pb) / (6 * m * n):.6f}",
                "max_len_forward": fwd.max_len if fwd else 0,
                "bound_forward": 2 * n + 1,
                "max_len_backward": bwd.max_len if bwd else 0,
                "bound_backward": 4 * m + 1,
            }
            if timing:
                row["wall_ms"] = f"{1000 * elapsed:.3f}"
            rows.append(row)
    return rows


def to_csv(rows, timing: bool = False) -> str:
    columns = COLUMNS + (["wall_ms"] if timing else [])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def to_table(rows) -> str:
    header = f"{'m':>6} {'n':>6} {'trials':>6} {'median ms':>10} {'push/6mn':>9} {'len fwd':>11} {'len bwd':>11}"
    lines = [header]
    groups: dict[tuple[int, int], list[dict]] = {}
    for row in rows:
        groups.setdefault((row["m"], row["n"]), []).append(row)
    for (m, n), group in groups.items():
        wall = np.median([float(r.get("wall_ms", "nan")) for r in group])
        ratio = max(float(r["push_ratio"]) for r in group)
        lf = max(r["max_len_forward"] for r in group)
        lb = max(r["max_len_backward"] for r in group)
        lines.append(
            f"{m:>6} {n:>6} {len(group):>6} {wall:>10.2f} {ratio:>9.4f} "
            f"{f'{lf}/{2 * n + 1}':>11} {f'{lb}/{4 * m + 1}':>11}"
        )
    return "\n".join(lines) + "\n"
