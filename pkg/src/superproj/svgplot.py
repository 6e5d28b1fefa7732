"""Standalone SVG renderings of the curve, polygon, regions, and iterates.

Hand-rolled SVG 1.1 with fixed-precision coordinates so identical inputs
produce byte-identical files — the CLI's determinism contract.  Color
roles: blue curve, red polygon, light gray region separators, dashed gray
iterate path, orange iterates, green final point, black query.
"""

from __future__ import annotations

import math

from .geometry import Point2, SuperellipseParams, boundary_point
from .polygon import PolygonSpec, support_line, vertex

# Drawing every vertex of a huge polygon produces unusable multi-MB files;
# renderings are capped well below the library's K_MAX.
RENDER_K_MAX = 1 << 16

_CURVE_COLOR = "#1f77b4"
_POLY_COLOR = "#d62728"
_RAY_COLOR = "#c8c8c8"
_PATH_COLOR = "#7f7f7f"
_STEP_COLOR = "#ff7f0e"
_FINAL_COLOR = "#2ca02c"
_QUERY_COLOR = "#000000"


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    """World-to-pixel transform plus an element buffer."""

    def __init__(self, xs: list[float], ys: list[float], width: int, height: int):
        pad_x = 0.08 * (max(xs) - min(xs)) or 1.0
        pad_y = 0.08 * (max(ys) - min(ys)) or 1.0
        x0, x1 = min(xs) - pad_x, max(xs) + pad_x
        y0, y1 = min(ys) - pad_y, max(ys) + pad_y
        self.scale = min(width / (x1 - x0), height / (y1 - y0))
        self.ox = width / 2.0 - self.scale * (x0 + x1) / 2.0
        self.oy = height / 2.0 + self.scale * (y0 + y1) / 2.0
        self.elements: list[str] = []

    def to_px(self, pt: Point2) -> tuple[float, float]:
        return (self.ox + self.scale * pt.x, self.oy - self.scale * pt.y)

    def polyline(self, pts: list[Point2], stroke: str, sw: float, *,
                 closed: bool = False, dash: str | None = None) -> None:
        coords = " ".join("%s,%s" % (_fmt(x), _fmt(y)) for x, y in map(self.to_px, pts))
        tag = "polygon" if closed else "polyline"
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self.elements.append(
            f'<{tag} points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{sw}"{dash_attr}/>'
        )

    def line(self, a: Point2, b: Point2, stroke: str, sw: float) -> None:
        (x1, y1), (x2, y2) = self.to_px(a), self.to_px(b)
        self.elements.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{sw}"/>'
        )

    def circle(self, pt: Point2, r: float, fill: str) -> None:
        x, y = self.to_px(pt)
        self.elements.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{r}" fill="{fill}"/>'
        )


def render_svg(
    params: SuperellipseParams,
    *,
    k: int | None = None,
    query: Point2 | None = None,
    trace=None,
    curve_samples: int = 1024,
    width: int = 640,
    height: int = 640,
) -> str:
    """Render the curve, optionally a k-gon with its region separators, and
    optionally a query point with its projection trace, to an SVG string."""
    if k is not None and not 3 <= k <= RENDER_K_MAX:
        raise ValueError(f"k must be in [3, {RENDER_K_MAX}] for rendering, got {k}")
    if curve_samples < 8:
        raise ValueError(f"curve_samples must be at least 8, got {curve_samples}")

    xs = [-params.a, params.a]
    ys = [-params.b, params.b]
    if query is not None:
        xs.append(query.x)
        ys.append(query.y)
    steps = list(trace.steps) if trace is not None else []
    for step in steps:
        xs.append(step.point.x)
        ys.append(step.point.y)
    cv = _Canvas(xs, ys, width, height)
    cv.elements.append(f'<rect width="{width}" height="{height}" fill="#ffffff"/>')

    if k is not None:
        spec = PolygonSpec(params, k)
        verts = [vertex(spec, t) for t in range(k)]
        # Region separators: from each vertex, rays along the outward
        # normals of its two incident edges bound the vertex's normal cone
        # (and, between consecutive cones, each facet's strip).
        reach = 3.0 * max(params.a, params.b, *(abs(v) for v in xs + ys))
        for t in range(k):
            origin = verts[t]
            for line in (support_line(spec, t - 1), support_line(spec, t)):
                n = line.a.norm()
                tip = Point2(
                    origin.x + reach * line.a.x / n, origin.y + reach * line.a.y / n
                )
                cv.line(origin, tip, _RAY_COLOR, 0.75)

    curve_pts = [
        boundary_point(params, 2.0 * math.pi * i / curve_samples)
        for i in range(curve_samples)
    ]
    cv.polyline(curve_pts, _CURVE_COLOR, 1.5, closed=True)

    if k is not None:
        cv.polyline(verts, _POLY_COLOR, 1.0, closed=True)
        for v in verts:
            cv.circle(v, 2.5, _POLY_COLOR)

    plotted = [s for s in steps if s.n >= 1]
    if plotted:
        path = ([query] if query is not None else []) + [s.point for s in plotted]
        cv.polyline(path, _PATH_COLOR, 1.0, dash="4 3")
        for s in plotted:
            cv.circle(s.point, 2.0, _STEP_COLOR)
        cv.circle(plotted[-1].point, 3.0, _FINAL_COLOR)
    if query is not None:
        cv.circle(query, 3.0, _QUERY_COLOR)

    body = "\n".join(cv.elements)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n{body}\n</svg>\n'
    )
