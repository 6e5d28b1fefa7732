"""Inscribed polygons and their half-space representation.

The polygon with k vertices places vertex t at the image of the k-th root
of unity exp(2*pi*i*t/k) under the radial map onto the curve.  Vertices
are computed on demand from (k, t) — no vertex array is ever allocated —
so refinement can double k dozens of times without touching more than a
handful of points.

Index doubling is exact: vertex t of the k-gon and vertex 2t of the
2k-gon evaluate cos/sin at bit-identical angles, because (2*pi*t)/k and
(2*pi*2t)/(2k) round identically in binary64.  Downstream stall detection
relies on this.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .geometry import TWO_PI, Point2, SuperellipseParams, weighted_p_norm

# Above this, angular spacing 2*pi/k sinks below binary64 resolution and
# adjacent vertices stop being distinguishable.  Exceeding it is an error.
K_MAX = 2**48

# Largest k for which halfspace_membership materializes all support lines.
FULL_SCAN_MAX = 2**20

# Absolute slack on the algebraic residual <a_t, q> - b_t.  Note ||a_t||
# shrinks like O(1/k), so this is not a Euclidean distance tolerance.
TOL_HALFSPACE = 1e-9


@dataclass(frozen=True)
class PolygonSpec:
    """An inscribed k-gon, identified purely by shape parameters and k."""

    params: SuperellipseParams
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise ValueError(f"k must be an integer, got {self.k!r}")
        if self.k < 3:
            raise ValueError(f"k must be at least 3, got {self.k}")
        if self.k > K_MAX:
            raise ValueError(f"k must not exceed {K_MAX}, got {self.k}")


@dataclass(frozen=True)
class SupportLine:
    """Outward half-space <a, q> <= b containing the polygon; edge index t."""

    a: Point2
    b: float
    t: int


@dataclass(frozen=True)
class HalfspaceResult:
    """Outcome of testing q against the polygon's support constraints."""

    violated: tuple[int, ...]

    @property
    def inside(self) -> bool:
        return not self.violated


def _vertex_with_norm(spec: PolygonSpec, t: int) -> tuple[Point2, float]:
    """Vertex t and the weighted p-norm of the unit vector it comes from."""
    t %= spec.k
    ang = (TWO_PI * t) / spec.k
    u = Point2(math.cos(ang), math.sin(ang))
    n = weighted_p_norm(spec.params, u)
    return Point2(u.x / n, u.y / n), n


def vertex(spec: PolygonSpec, t: int) -> Point2:
    """Vertex t (index reduced mod k), lying on the curve."""
    return _vertex_with_norm(spec, t)[0]


def edge_chord(spec: PolygonSpec, t: int) -> float:
    """Length of edge t, the chord from vertex t to vertex t+1."""
    return vertex(spec, t).dist(vertex(spec, t + 1))


def support_line(spec: PolygonSpec, t: int) -> SupportLine:
    """Support line of edge t.

    The normal is the chord rotated a quarter turn outward,
    a_t = (y_{t+1} - y_t, -(x_{t+1} - x_t)); the offset has the closed form
    b_t = sin(2*pi/k) / (n_t * n_{t+1}) with n_t the weighted p-norm of the
    t-th root of unity.  Both vertices satisfy <a_t, P> = b_t.
    """
    t %= spec.k
    p0, n0 = _vertex_with_norm(spec, t)
    p1, n1 = _vertex_with_norm(spec, t + 1)
    a = Point2(p1.y - p0.y, -(p1.x - p0.x))
    b = math.sin(TWO_PI / spec.k) / (n0 * n1)
    return SupportLine(a=a, b=b, t=t)


def sector_index(spec: PolygonSpec, q: Point2) -> int:
    """Index t of the angular sector [2*pi*t/k, 2*pi*(t+1)/k) containing q.

    The polygon is star-shaped around the origin with vertex t on the ray
    at angle 2*pi*t/k, so q (away from the origin) lies in the cone spanned
    by vertices t and t+1 for this t.
    """
    theta = math.atan2(q.y, q.x) % TWO_PI
    return int((spec.k * theta) / TWO_PI) % spec.k


def vertex_array(spec: PolygonSpec, ts: np.ndarray | None = None) -> np.ndarray:
    """Vertices at the given indices (all k when ts is None) as an (m, 2) array.

    Bulk counterpart of vertex(); intended for k small enough to materialize.
    """
    if ts is None:
        if spec.k > FULL_SCAN_MAX:
            raise ValueError(f"refusing to materialize {spec.k} vertices")
        ts = np.arange(spec.k, dtype=np.int64)
    else:
        ts = np.asarray(ts, dtype=np.int64) % spec.k
    angles = (TWO_PI * ts.astype(np.float64)) / spec.k
    p = spec.params
    return _kernels.boundary_batch(p.a, p.b, p.p, angles)


def halfspace_membership(
    spec: PolygonSpec, q: Point2, tol: float = TOL_HALFSPACE
) -> HalfspaceResult:
    """Test q against the intersection of the k support half-spaces.

    Inside iff <a_t, q> <= b_t + tol for all t.  For k <= FULL_SCAN_MAX all
    violated indices are reported.  Above that cap a full scan is off the
    table; the star-shape argument makes the single sector edge a complete
    inside/outside test, so the decision stays exact but the violated list
    is truncated to that witness index.
    """
    if spec.k <= FULL_SCAN_MAX:
        V = vertex_array(spec)
        W = np.roll(V, -1, axis=0)
        ax = W[:, 1] - V[:, 1]
        ay = -(W[:, 0] - V[:, 0])
        # b_t via the closed form needs ||xi^t||_p; recompute from the angles.
        ts = np.arange(spec.k, dtype=np.float64)
        ang = (TWO_PI * ts) / spec.k
        u, v = np.cos(ang), np.sin(ang)
        p = spec.params
        norms = (np.abs(u / p.a) ** p.p + np.abs(v / p.b) ** p.p) ** (1.0 / p.p)
        b = np.sin(TWO_PI / spec.k) / (norms * np.roll(norms, -1))
        resid = ax * q.x + ay * q.y - b
        violated = np.nonzero(resid > tol)[0]
        return HalfspaceResult(violated=tuple(int(i) for i in violated))
    ts = sector_index(spec, q)
    line = support_line(spec, ts)
    if line.a.dot(q) - line.b > tol:
        return HalfspaceResult(violated=(ts,))
    return HalfspaceResult(violated=())
