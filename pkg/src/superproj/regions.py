"""Partition of the polygon's exterior by nearest-feature, and the
closed-form projections that go with it.

Every exterior point projects either onto the relative interior of one
edge (its preimage is a half-open rectangular strip) or onto one vertex
(its preimage is the affine normal cone at that vertex).  classify()
decides which; project_onto_polygon() turns the answer into the actual
nearest point.

The two inequality systems, for a query q:

  vertex t:   <q - P_t, P_{t+1} - P_t> <= 0   and   <q - P_t, P_{t-1} - P_t> <= 0
  facet t:    <a_t, q> - b_t >= 0,  and the unclamped segment parameter
              s = <q - P_t, P_{t+1} - P_t> / ||P_{t+1} - P_t||^2  lies in (0, 1)

evaluated with a single signed slack so that points within rounding of a
region boundary resolve deterministically: vertex systems are tested
before facet systems, lowest index first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geometry import Point2
from .polygon import (
    TOL_HALFSPACE,
    PolygonSpec,
    SupportLine,
    halfspace_membership,
    sector_index,
    support_line,
    vertex,
)

# Signed slack applied to each comparison in the region systems.  Absolute
# on dot-product values, so meaningful for moderate k; at extreme k the
# edge vectors shrink and the slack loosens relative to edge scale.
TOL_REGION = 1e-9

# Slack on the segment parameter s when snapping a projection to an endpoint.
SEG_TOL = 1e-12

# Below this separation two segment endpoints are indistinguishable.
DEGENERATE_EPS = 1e-14

# classify scans every region up to this k; above it, an expanding window
# around the angular sector of q is searched instead.
SMALL_SCAN_MAX = 64


class RegionKind(Enum):
    INTERIOR = "interior"
    FACET = "facet"
    VERTEX = "vertex"


class SegmentLocation(Enum):
    INTERIOR = "interior"
    ENDPOINT_A = "endpoint_a"
    ENDPOINT_B = "endpoint_b"


class NoRegionMatched(RuntimeError):
    """No region system accepted the query — a tolerance/geometry bug."""


class DegenerateSegment(ValueError):
    """Segment endpoints coincide to within DEGENERATE_EPS."""


@dataclass(frozen=True)
class RegionId:
    """One cell of the partition: the polygon interior, a facet strip, or a
    vertex cone.  index is the owning edge/vertex, None for the interior."""

    kind: RegionKind
    index: int | None

    def __post_init__(self) -> None:
        if (self.kind is RegionKind.INTERIOR) != (self.index is None):
            raise ValueError(f"index must be None exactly for interior, got {self}")

    @classmethod
    def interior(cls) -> "RegionId":
        return cls(RegionKind.INTERIOR, None)

    @classmethod
    def facet(cls, t: int) -> "RegionId":
        return cls(RegionKind.FACET, t)

    @classmethod
    def vertex(cls, t: int) -> "RegionId":
        return cls(RegionKind.VERTEX, t)


def project_onto_support_line(line: SupportLine, q: Point2) -> Point2:
    """Foot of the perpendicular from q to the line <a, y> = b."""
    a = line.a
    scale = (a.dot(q) - line.b) / a.dot(a)
    return Point2(q.x - scale * a.x, q.y - scale * a.y)


def project_onto_segment(
    A: Point2, B: Point2, q: Point2, tol: float = SEG_TOL
) -> tuple[Point2, SegmentLocation]:
    """Nearest point of the closed segment [A, B] to q, with a location tag.

    The line parameter s = <q-A, B-A>/||B-A||^2 is clamped to [0,1];
    s within tol of the ends returns the endpoint exactly (not a point
    rounded onto it), which downstream bit-equality checks rely on.
    """
    e = B - A
    ee = e.dot(e)
    if ee < DEGENERATE_EPS * DEGENERATE_EPS:
        raise DegenerateSegment(f"segment endpoints coincide: {A}, {B}")
    s = (q - A).dot(e) / ee
    if s <= tol:
        return A, SegmentLocation.ENDPOINT_A
    if s >= 1.0 - tol:
        return B, SegmentLocation.ENDPOINT_B
    return Point2(A.x + s * e.x, A.y + s * e.y), SegmentLocation.INTERIOR


def _vertex_system(spec: PolygonSpec, t: int, q: Point2, tol: float) -> bool:
    """q lies in the normal cone at vertex t (both edge-direction dots <= 0)."""
    pt = vertex(spec, t)
    to_next = vertex(spec, t + 1) - pt
    to_prev = vertex(spec, t - 1) - pt
    d = q - pt
    return d.dot(to_next) <= tol and d.dot(to_prev) <= tol


def _facet_system(spec: PolygonSpec, t: int, q: Point2, tol: float) -> bool:
    """q lies in the outward strip over the relative interior of edge t."""
    line = support_line(spec, t)
    if line.a.dot(q) - line.b < -tol:
        return False
    a_v = vertex(spec, t)
    b_v = vertex(spec, t + 1)
    e = b_v - a_v
    # the strict 0 < s < 1 conditions, expressed on the unnormalized dots
    return (q - a_v).dot(e) > -tol and (q - b_v).dot(e) < tol


def classify(spec: PolygonSpec, q: Point2, tol: float = TOL_REGION) -> RegionId:
    """Name the partition cell containing q.

    Points inside the polygon (boundary included, up to the half-space
    slack) are the polygon-interior cell — the systems below partition only
    the exterior.  For k <= SMALL_SCAN_MAX every region is scanned: vertex
    systems first, then facet systems, lowest index winning.  For larger k
    the scan starts from the angular sector of q and expands exponentially,
    which is O(1) for any point a fixed fraction of an edge away from a
    region boundary and degrades to the full scan in the worst case; in
    tolerance-degenerate multi-match cases it may return the match nearest
    the sector rather than the globally lowest index.
    """
    if spec.k <= SMALL_SCAN_MAX:
        inside = halfspace_membership(spec, q).inside
    else:
        # O(1) membership: the polygon is star-shaped around the origin, so
        # the single sector edge decides (same test halfspace_membership
        # applies above its full-scan cap).
        line = support_line(spec, sector_index(spec, q))
        inside = line.a.dot(q) - line.b <= TOL_HALFSPACE
    if inside:
        return RegionId.interior()
    if spec.k <= SMALL_SCAN_MAX:
        for t in range(spec.k):
            if _vertex_system(spec, t, q, tol):
                return RegionId.vertex(t)
        for t in range(spec.k):
            if _facet_system(spec, t, q, tol):
                return RegionId.facet(t)
        raise NoRegionMatched(f"no region system accepted {q} for k={spec.k}")

    center = sector_index(spec, q)
    half = 2
    while True:
        if 2 * half + 1 >= spec.k:
            offsets = range(spec.k)
        else:
            offsets = range(-half, half + 1)
        candidates = sorted({(center + off) % spec.k for off in offsets})
        for t in candidates:
            if _vertex_system(spec, t, q, tol):
                return RegionId.vertex(t)
        for t in candidates:
            if _facet_system(spec, t, q, tol):
                return RegionId.facet(t)
        if len(candidates) == spec.k:
            raise NoRegionMatched(f"no region system accepted {q} for k={spec.k}")
        half *= 2


def project_onto_polygon(spec: PolygonSpec, q: Point2) -> tuple[Point2, RegionId]:
    """Nearest point of the polygon to q, and the region that decided it."""
    region = classify(spec, q)
    if region.kind is RegionKind.INTERIOR:
        return q, region
    if region.kind is RegionKind.VERTEX:
        return vertex(spec, region.index), region
    return project_onto_support_line(support_line(spec, region.index), q), region
