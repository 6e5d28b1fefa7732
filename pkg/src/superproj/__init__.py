"""Metric projection onto superelliptic disks via polygonal refinement.

The superellipse |x/a|^p + |y/b|^p = 1 (p > 1) bounds a strictly convex
disk.  This package computes the nearest point of that disk to any planar
query by projecting onto inscribed polygons whose vertex count doubles
until the answer stabilizes, with an independent brute-force oracle and
polygon-vs-curve convergence diagnostics alongside.
"""

from ._kernels import BACKEND
from .geometry import (
    EPS_CURVE,
    EPS_UNIT,
    TOL_BOUNDARY,
    Membership,
    Point2,
    SuperellipseParams,
    boundary_point,
    constraint_value,
    disk_membership,
    phi,
    psi,
    weighted_p_norm,
)
from .oracle import OracleResult, hausdorff_estimate, max_chord, oracle_project
from .polygon import (
    K_MAX,
    TOL_HALFSPACE,
    HalfspaceResult,
    PolygonSpec,
    SupportLine,
    edge_chord,
    halfspace_membership,
    sector_index,
    support_line,
    vertex,
)
from .projector import (
    InvalidConfig,
    Locus,
    LocusKind,
    ProjectionTrace,
    RefinementState,
    StopReason,
    TraceStep,
    absolute_errors,
    project,
)
from .regions import (
    TOL_REGION,
    DegenerateSegment,
    NoRegionMatched,
    RegionId,
    RegionKind,
    SegmentLocation,
    classify,
    project_onto_polygon,
    project_onto_segment,
    project_onto_support_line,
)
from .svgplot import render_svg

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EPS_CURVE",
    "EPS_UNIT",
    "K_MAX",
    "TOL_BOUNDARY",
    "TOL_HALFSPACE",
    "TOL_REGION",
    "DegenerateSegment",
    "HalfspaceResult",
    "InvalidConfig",
    "Locus",
    "LocusKind",
    "Membership",
    "NoRegionMatched",
    "OracleResult",
    "Point2",
    "PolygonSpec",
    "ProjectionTrace",
    "RefinementState",
    "RegionId",
    "RegionKind",
    "SegmentLocation",
    "StopReason",
    "SuperellipseParams",
    "SupportLine",
    "TraceStep",
    "absolute_errors",
    "boundary_point",
    "classify",
    "constraint_value",
    "disk_membership",
    "edge_chord",
    "halfspace_membership",
    "hausdorff_estimate",
    "max_chord",
    "oracle_project",
    "phi",
    "project",
    "project_onto_polygon",
    "project_onto_segment",
    "project_onto_support_line",
    "psi",
    "render_svg",
    "sector_index",
    "support_line",
    "vertex",
    "weighted_p_norm",
    "__version__",
]
