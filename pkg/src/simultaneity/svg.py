"""Deterministic SVG 1.1 spacetime diagrams in an adapted 2-plane of X.

Horizontal axis: signed distance from X along the plane axis. Vertical
axis: clock time, increasing upward. Light cones are drawn at 45 degrees,
so both axes share one scale. Every coordinate is an exact rational
rounded to 6 decimals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ViewportError
from .lattice import LatticeGrid, plane_coordinates
from .relations import RelationSpec
from .scalars import Rat, as_rational

__all__ = ["DiagramSpec", "decimal6", "render_svg"]

CANVAS_WIDTH = 600
STROKES = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def decimal6(q) -> str:
    """Exact rational rounded half-to-even at 6 decimals, e.g. '-0.333333'."""
    n = round(as_rational(q) * 10**6)
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(int(n)), 10**6)
    return f"{sign}{whole}.{frac:06d}"


@dataclass(frozen=True)
class DiagramSpec:
    """Viewport (xi_min, xi_max, tau_min, tau_max) in plane coordinates."""

    viewport: tuple
    class_samples: int = 24

    def __post_init__(self):
        box = tuple(as_rational(c) for c in self.viewport)
        if len(box) != 4:
            raise ViewportError("viewport needs four bounds")
        if box[1] <= box[0] or box[3] <= box[2]:
            raise ViewportError("viewport has zero area")
        object.__setattr__(self, "viewport", box)
        if self.class_samples < 1:
            raise ViewportError("class_samples must be positive")


class _Canvas:
    def __init__(self, spec: DiagramSpec):
        self.x0, self.x1, self.t0, self.t1 = spec.viewport
        self.k = Rat(CANVAS_WIDTH) / (self.x1 - self.x0)
        self.height = (self.t1 - self.t0) * self.k

    def xy(self, xi, tau) -> tuple[str, str]:
        return decimal6((xi - self.x0) * self.k), decimal6((self.t1 - tau) * self.k)

    def line(self, a, b, cls: str) -> str:
        (x1, y1), (x2, y2) = self.xy(*a), self.xy(*b)
        return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'

    def polyline(self, pts, cls: str, stroke: str) -> str:
        coords = " ".join(",".join(self.xy(xi, tau)) for xi, tau in pts)
        return f'<polyline class="{cls}" stroke="{stroke}" fill="none" points="{coords}"/>'


def _cone_segment(c: _Canvas, slope: int):
    """Part of tau = slope * xi inside the viewport, or None."""
    lo = max(c.x0, c.t0 * slope) if slope > 0 else max(c.x0, -c.t1)
    hi = min(c.x1, c.t1 * slope) if slope > 0 else min(c.x1, -c.t0)
    if lo >= hi:
        return None
    return (lo, slope * lo), (hi, slope * hi)


def render_svg(spec: DiagramSpec, grid: Optional[LatticeGrid] = None,
               classes: Optional[tuple[RelationSpec, Sequence]] = None) -> bytes:
    """SVG bytes for a lattice grid and/or sampled classes of a relation.

    ``classes`` is (relation, representative clock times); each class is the
    curve tau = rep + f(|xi|) sampled at evenly spaced rational abscissae.
    Without content only the axes, the worldline and the light cone of the
    plane origin are drawn.
    """
    c = _Canvas(spec)
    w, h = decimal6(CANVAS_WIDTH), decimal6(c.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        '<style>line{stroke:#444;stroke-width:1}.cone{stroke-dasharray:4 3}'
        '.worldline{stroke:#000;stroke-width:2}circle{fill:#000}'
        'text{font:10px sans-serif}</style>',
    ]
    if c.t0 <= 0 <= c.t1:
        out.append(c.line((c.x0, 0), (c.x1, 0), "axis"))
    if c.x0 <= 0 <= c.x1:
        out.append(c.polyline([(0, c.t0), (0, c.t1)], "worldline", "#000"))
    for slope in (1, -1):
        seg = _cone_segment(c, slope)
        if seg:
            out.append(c.line(*seg, "cone"))

    if classes is not None:
        relation, reps = classes
        f = relation.profile()
        n = spec.class_samples
        xs = [c.x0 + (c.x1 - c.x0) * Rat(i, n) for i in range(n + 1)]
        for i, rep in enumerate(reps):
            rep = as_rational(rep)
            pts = [(xi, rep + f(abs(xi))) for xi in xs]
            out.append(c.polyline(pts, "class", STROKES[i % len(STROKES)]))

    if grid is not None:
        for m, k in grid.indices():
            tau, xi = plane_coordinates(grid.plane, grid.x00, grid[m, k])
            if not (c.x0 <= xi <= c.x1 and c.t0 <= tau <= c.t1):
                continue
            x, y = c.xy(xi, tau)
            out.append(f'<circle id="x_{m}_{k}" cx="{x}" cy="{y}" r="3"/>')
            out.append(f'<text x="{x}" y="{y}" dx="5" dy="-5">x{m},{k}</text>')

    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
