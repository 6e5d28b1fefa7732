"""Brute-force reference projection and convergence diagnostics.

oracle_project answers the same question as the refinement projector but
shares none of its machinery: a dense scan of the boundary angle, then
golden-section refinement of the bracketing interval.  Slow and simple on
purpose — it is the yardstick the fast path is measured against.

hausdorff_estimate and max_chord quantify how closely an inscribed polygon
tracks the curve; both are sampled diagnostics, not certified bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from . import _kernels
from ._extended import LD, TWO_PI_LD, boundary_ld
from .geometry import (
    TWO_PI,
    Membership,
    Point2,
    SuperellipseParams,
    disk_membership,
)
from .polygon import PolygonSpec

DEFAULT_GRID = 10**6
DEFAULT_SAMPLES = 10**4

# Golden-section refinement stops at this bracket width (radians).
BRACKET_WIDTH = 1e-14

# Full chord scan up to this k; above it a strided subsample of edges.
CHORD_SCAN_MAX = 1 << 20

_INV_PHI = (np.sqrt(LD(5)) - LD(1)) / LD(2)


@dataclass(frozen=True)
class OracleResult:
    """Reference projection: the curve point, its angle, the distance to the
    query, and the grid size that seeded the search."""

    point: Point2
    theta: float
    distance: float
    samples: int


def oracle_project(
    params: SuperellipseParams, q: Point2, grid: int = DEFAULT_GRID
) -> OracleResult:
    """Nearest curve point to an exterior (or boundary) query.

    Scans ``grid`` uniformly spaced angles for the closest boundary point,
    then golden-section-refines the bracketing interval down to
    BRACKET_WIDTH.  For an exterior query the boundary distance is
    unimodal, so the bracket always contains the unique minimizer.  The
    refinement stage evaluates in extended precision: within the bracket
    the binary64 distances to a far query are flat to the last ulp, and
    the refined angle would otherwise wander that plateau (see _extended).
    """
    if grid < 4:
        raise ValueError(f"grid must be at least 4, got {grid}")
    if disk_membership(params, q) is Membership.STRICT_INTERIOR:
        raise ValueError(
            f"query {q} is interior: it is its own projection and bypasses the oracle"
        )
    i, _ = _kernels.grid_argmin(params.a, params.b, params.p, q.x, q.y, grid)
    lo = (TWO_PI_LD * LD(int(i) - 1)) / LD(grid)
    hi = (TWO_PI_LD * LD(int(i) + 1)) / LD(grid)
    qx, qy = LD(q.x), LD(q.y)

    def f(theta):
        x, y = boundary_ld(params.a, params.b, params.p, theta)
        return (x - qx) * (x - qx) + (y - qy) * (y - qy)

    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc = f(c)
    fd = f(d)
    while hi - lo > BRACKET_WIDTH:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
    theta_ld = (LD(0.5) * (lo + hi)) % TWO_PI_LD
    x, y = boundary_ld(params.a, params.b, params.p, theta_ld)
    dist = float(np.sqrt((x - qx) * (x - qx) + (y - qy) * (y - qy)))
    point = Point2(float(x), float(y))
    return OracleResult(point=point, theta=float(theta_ld), distance=dist, samples=grid)


def hausdorff_estimate(spec: PolygonSpec, samples: int = DEFAULT_SAMPLES) -> float:
    """Sampled Hausdorff distance between the curve and the polygon.

    Takes ``samples`` curve points uniform in angle and ``samples`` points
    spread evenly over the polygon's edges, and returns the larger of the
    two directed sup-inf distances between the clouds.  A diagnostic
    estimate only: it converges to the true distance as samples grow but
    certifies nothing.  samples >= k is recommended so every edge receives
    a sample point.
    """
    if samples < 2:
        raise ValueError(f"samples must be at least 2, got {samples}")
    k = spec.k
    if k * samples >= 2**62:
        raise ValueError(f"k * samples too large for exact edge indexing: {k}, {samples}")
    prm = spec.params
    j = np.arange(samples, dtype=np.int64)

    curve = _kernels.boundary_batch(
        prm.a, prm.b, prm.p, (TWO_PI * j.astype(np.float64)) / samples
    )

    # Walk the polygon by the exact rational parameter u = j*k/samples:
    # edge floor(u), fraction u - floor(u), both computed in integers.
    num = j * k
    e = num // samples
    frac = (num % samples).astype(np.float64) / samples
    ang_a = (TWO_PI * e.astype(np.float64)) / k
    ang_b = (TWO_PI * ((e + 1) % k).astype(np.float64)) / k
    A = _kernels.boundary_batch(prm.a, prm.b, prm.p, ang_a)
    B = _kernels.boundary_batch(prm.a, prm.b, prm.p, ang_b)
    poly = A * (1.0 - frac)[:, None] + B * frac[:, None]

    d_curve_to_poly = cKDTree(poly).query(curve)[0].max()
    d_poly_to_curve = cKDTree(curve).query(poly)[0].max()
    return float(max(d_curve_to_poly, d_poly_to_curve))


def max_chord(spec: PolygonSpec) -> float:
    """Length of the longest polygon edge.

    Exact (all k edges) up to CHORD_SCAN_MAX; above that a uniform strided
    subsample of edges is measured instead, which is a lower bound.
    """
    k = spec.k
    if k <= CHORD_SCAN_MAX:
        t = np.arange(k, dtype=np.int64)
    else:
        stride = -(-k // CHORD_SCAN_MAX)
        t = np.arange(0, k, stride, dtype=np.int64)
    prm = spec.params
    V = _kernels.boundary_batch(prm.a, prm.b, prm.p, (TWO_PI * t.astype(np.float64)) / k)
    W = _kernels.boundary_batch(
        prm.a, prm.b, prm.p, (TWO_PI * ((t + 1) % k).astype(np.float64)) / k
    )
    return float(np.hypot(W[:, 0] - V[:, 0], W[:, 1] - V[:, 1]).max())
