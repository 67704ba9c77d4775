"""Static SVG rendering of a doubled free-space diagram.

u grows to the right and v upward, origin at the bottom-left corner.
"""

from __future__ import annotations

from html import escape

import numpy as np

from .decision import DecisionReport

FREE = "#b8e6b0"
DOWN = "#1f6fd1"
UP = "#e07b00"
WITNESS = "#c0143c"
GRIDLINE = "#d0d0d0"


class _Canvas:
    def __init__(self, width, height):
        self.width = width
        self.height = height
        self.parts = []

    def line(self, x1, y1, x2, y2, stroke, width=1.0, extra=""):
        self.parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{stroke}" stroke-width="{width:.2f}" {extra}/>'
        )

    def circle(self, cx, cy, r, fill):
        self.parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="{fill}"/>')

    def text(self, x, y, s, size=10, fill="#222", anchor="start"):
        self.parts.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-size="{size}" font-family="monospace" '
            f'fill="{fill}" text-anchor="{anchor}">{escape(s)}</text>'
        )

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width:.0f}" '
            f'height="{self.height:.0f}" viewBox="0 0 {self.width:.0f} {self.height:.0f}">\n'
            f'<rect width="100%" height="100%" fill="white"/>\n'
        )
        return head + "\n".join(self.parts) + "\n</svg>\n"


def render_svg(report: DecisionReport, max_width: float = 1200.0) -> str:
    """Draw a report produced with ``decide(..., keep=True)``."""
    grid = report.grid
    if grid is None:
        raise ValueError("report was produced without keep=True")
    m2, n = 2 * grid.m, grid.n
    cell = float(np.clip(max_width / m2, 3.0, 60.0))
    margin, top = 40.0, 70.0
    canvas = _Canvas(2 * margin + m2 * cell, top + margin + n * cell + 20)

    def px(u):
        return margin + u * cell

    def py(v):
        return top + (n - v) * cell

    for i in range(m2 + 1):
        canvas.line(px(i), py(0), px(i), py(n), GRIDLINE, 0.5)
    for j in range(n + 1):
        canvas.line(px(0), py(j), px(m2), py(j), GRIDLINE, 0.5)
    canvas.line(px(grid.m), py(0), px(grid.m), py(n), "#888", 1.0, 'stroke-dasharray="4 3"')

    free_w = max(cell * 0.18, 1.5)
    reach_w = max(cell * 0.06, 0.8)
    shift = free_w * 0.3

    def horizontal(lo, hi, color, width, dy=0.0):
        for i in range(1, m2 + 1):
            for j in range(n + 1):
                if not np.isnan(lo[i, j]):
                    canvas.line(px(lo[i, j]), py(j) + dy, px(hi[i, j]), py(j) + dy, color, width)

    def vertical(lo, hi, color, width, dx=0.0):
        for i in range(m2 + 1):
            for j in range(1, n + 1):
                if not np.isnan(lo[i, j]):
                    canvas.line(px(i) + dx, py(lo[i, j]), px(i) + dx, py(hi[i, j]), color, width)

    horizontal(grid.t_lo, grid.t_hi, FREE, free_w)
    vertical(grid.r_lo, grid.r_hi, FREE, free_w)

    reach = report.reach
    if reach is not None:
        horizontal(reach.down_t_lo, reach.down_t_hi, DOWN, reach_w, -shift)
        vertical(reach.down_r_lo, reach.down_r_hi, DOWN, reach_w, -shift)
        horizontal(reach.up_t_lo, reach.up_t_hi, UP, reach_w, shift)
        vertical(reach.up_r_lo, reach.up_r_hi, UP, reach_w, shift)

    if report.passes is not None and cell >= 12:
        fwd = report.passes.forward
        for i in range(grid.m + 1, m2 + 1):
            for k, t in enumerate(fwd.partition(i)):
                canvas.line(px(t.beg), py(n) - 4, px(t.beg), py(n) - 10, DOWN, 1.0)
                label = "id" if t.is_identity else f"{t.val:.3g}"
                canvas.text(px(0.5 * (t.beg + t.end)), py(n) - 12 - 9 * (k % 2), label, 8, DOWN, "middle")

    if report.answer and report.witness_u is not None:
        u = report.witness_u
        r = max(cell * 0.12, 3.0)
        canvas.circle(px(u), py(0), r, WITNESS)
        canvas.circle(px(u + grid.m), py(n), r, WITNESS)
        canvas.line(px(u), py(0), px(u + grid.m), py(n), WITNESS, 0.8, 'stroke-dasharray="3 3"')

    verdict = "yes" if report.answer else "no"
    canvas.text(margin, 18, f"m={grid.m} n={n} eps={report.eps:.6g}  distance <= eps: {verdict}", 12)
    if report.witness_u is not None:
        canvas.text(margin, 34, f"witness shift u = {report.witness_u:.6g}", 11, WITNESS)
    canvas.text(margin, 50, "green: free   blue: reachable from bottom   orange: reachable from top", 10)
    canvas.text(px(0), py(0) + 16, "0", 10, anchor="middle")
    canvas.text(px(grid.m), py(0) + 16, "m", 10, anchor="middle")
    canvas.text(px(m2), py(0) + 16, "2m", 10, anchor="middle")
    return canvas.render()
