"""Metric projection onto the superelliptic disk by polygonal refinement.

Start from the nearest point of a coarse inscribed k0-gon, then repeatedly
double the vertex count.  Because old vertex m becomes new vertex 2m
(bit-exactly — see polygon.py), the projection onto the doubled polygon is
always found on one of just two candidate edges next to the current locus:

  on edge m      ->  test new edges 2m and 2m+1
  at vertex m    ->  test new edges 2m-1 and 2m   (indices mod the new k)

Each step is O(1), so driving the polygon error below a tolerance costs a
logarithmic number of steps.  The iterates approach the disk projection
from inside; they are never snapped onto the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._extended import LD, TWO_PI_LD, boundary_ld, curve_step_ld
from .geometry import Membership, Point2, SuperellipseParams, disk_membership
from .polygon import K_MAX, PolygonSpec
from .regions import (
    DEGENERATE_EPS,
    SEG_TOL,
    DegenerateSegment,
    RegionKind,
    project_onto_polygon,
)

DEFAULT_K0 = 6
DEFAULT_TOL = 1e-10
DEFAULT_MAX_REFINE = 60


class StopReason(Enum):
    TOLERANCE_MET = "tolerance_met"
    MAX_REFINEMENTS_REACHED = "max_refinements_reached"
    K_MAX_REACHED = "k_max_reached"


class LocusKind(Enum):
    EDGE = "edge"
    VERTEX = "vertex"


class InvalidConfig(ValueError):
    """Rejected projection configuration (k0, tol, or max_refine)."""


@dataclass(frozen=True)
class Locus:
    """Where an iterate sits on its polygon: interior of edge m, or vertex m."""

    kind: LocusKind
    index: int


@dataclass(frozen=True)
class RefinementState:
    """Live state between refinement steps: the polygon size, the locus of
    the current iterate, and the iterate itself."""

    k: int
    locus: Locus
    current: Point2


@dataclass(frozen=True)
class TraceStep:
    """One recorded iterate: step number n, polygon size k, the point, and
    its locus (None only for the degenerate inside-query step)."""

    n: int
    k: int
    point: Point2
    locus: Locus | None


@dataclass(frozen=True)
class ProjectionTrace:
    query: Point2
    steps: tuple[TraceStep, ...]
    converged: bool
    stop_reason: StopReason

    @property
    def final_point(self) -> Point2:
        return self.steps[-1].point

    @property
    def k_final(self) -> int:
        return self.steps[-1].k

    @property
    def inside(self) -> bool:
        return self.steps[0].n == 0

    @property
    def iterations(self) -> int:
        return 0 if self.inside else len(self.steps)


@dataclass(frozen=True)
class _Candidate:
    # g = |x - q|^2 - |V - q|^2 as a longdouble scalar, V the vertex the
    # two candidate edges share.  Only the difference of the two g values
    # is ever used, and dropping the common |V - q|^2 analytically keeps
    # that difference meaningful at query distances where full squared
    # distances agree to the last ulp (see _extended).
    g: float
    point: Point2
    locus: Locus
    chord: float


def _eval_pair(spec: PolygonSpec, e0: int, e1: int, q: Point2) -> tuple[_Candidate, _Candidate]:
    """Project q onto adjacent edges e0 = [U, V] and e1 = [V, W].

    pre: e0 == e1 - 1 (mod k): the edges share vertex V = vertex(e1).
    Everything is evaluated in extended precision relative to V — the
    shared vertex from boundary_ld, the edge vectors from curve_step_ld so
    they stay relative-accurate at any chord length — and only recorded
    points are rounded back to binary64.  Endpoint snapping follows the
    same rule as regions.project_onto_segment.
    """
    prm = spec.params
    k = spec.k
    t = e1 % k
    # Angle from the reduced index, so vertex t of this polygon and vertex
    # 2t after doubling evaluate bit-identically (scaling numerator and
    # denominator by 2 is exact): vertex stalls stay bitwise across steps.
    theta = (TWO_PI_LD * LD(t)) / LD(k)
    vx, vy = boundary_ld(prm.a, prm.b, prm.p, theta)
    h = TWO_PI_LD / LD(k)
    ux, uy = curve_step_ld(prm.a, prm.b, prm.p, theta, -h)  # U - V
    wx, wy = curve_step_ld(prm.a, prm.b, prm.p, theta, h)  # W - V
    rx, ry = LD(q.x) - vx, LD(q.y) - vy  # q - V

    def candidate(e: int, ax, ay, bx, by) -> _Candidate:
        # ax.. are edge endpoints relative to V, start vertex first.
        ex, ey = bx - ax, by - ay
        ee = ex * ex + ey * ey
        if ee <= DEGENERATE_EPS * DEGENERATE_EPS:
            raise DegenerateSegment(f"edge {e} of the {k}-gon has near-zero length")
        s = ((rx - ax) * ex + (ry - ay) * ey) / ee
        if s <= SEG_TOL:
            fx, fy = ax, ay
            locus = Locus(LocusKind.VERTEX, e)
        elif s >= 1.0 - SEG_TOL:
            fx, fy = bx, by
            locus = Locus(LocusKind.VERTEX, (e + 1) % k)
        else:
            fx, fy = ax + s * ex, ay + s * ey
            locus = Locus(LocusKind.EDGE, e)
        g = (fx - LD(2) * rx) * fx + (fy - LD(2) * ry) * fy
        point = Point2(float(vx + fx), float(vy + fy))
        return _Candidate(g, point, locus, float(np.sqrt(ee)))

    return (
        candidate(e0 % k, ux, uy, LD(0), LD(0)),
        candidate(t, LD(0), LD(0), wx, wy),
    )


def project(
    params: SuperellipseParams,
    q: Point2,
    *,
    k0: int = DEFAULT_K0,
    tol: float | None = DEFAULT_TOL,
    max_refine: int = DEFAULT_MAX_REFINE,
) -> ProjectionTrace:
    """Project q onto the superelliptic disk, recording every iterate.

    Queries inside the disk (boundary included) are their own projection and
    yield a single step with n = 0.  Otherwise iterate n lives on the
    2^(n-1)*k0-gon and the trace holds x^1 .. x^n in order.

    Stopping: consecutive-iterate displacement below tol on two successive
    steps, or n reaching max_refine, or the vertex count about to exceed
    K_MAX — whichever comes first.  Identical consecutive iterates are a
    real phenomenon, not convergence: a vertex iterate survives doubling
    bit-exactly until the local geometry refines past it.  Such exact
    vertex stalls neither advance nor reset the tolerance counter while the
    local edges remain longer than tol; once they are shorter, the stall is
    genuine convergence and counts.  tol=None disables the tolerance stop
    entirely (useful for fixed-step traces).
    """
    if not isinstance(k0, int) or isinstance(k0, bool) or k0 < 3:
        raise InvalidConfig(f"k0 must be an integer >= 3, got {k0!r}")
    if k0 > K_MAX:
        raise InvalidConfig(f"k0 must not exceed {K_MAX}, got {k0}")
    if tol is not None and not tol > 0.0:
        raise InvalidConfig(f"tol must be positive or None, got {tol!r}")
    if not isinstance(max_refine, int) or isinstance(max_refine, bool) or max_refine < 1:
        raise InvalidConfig(f"max_refine must be an integer >= 1, got {max_refine!r}")

    if disk_membership(params, q) is not Membership.EXTERIOR:
        step = TraceStep(n=0, k=0, point=q, locus=None)
        return ProjectionTrace(q, (step,), True, StopReason.TOLERANCE_MET)

    spec = PolygonSpec(params, k0)
    point, region = project_onto_polygon(spec, q)
    if region.kind is RegionKind.INTERIOR:
        # q sits within the membership slack of the polygon boundary; it is
        # its own projection to working precision.
        step = TraceStep(n=1, k=k0, point=point, locus=None)
        return ProjectionTrace(q, (step,), True, StopReason.TOLERANCE_MET)
    if region.kind is RegionKind.VERTEX:
        locus = Locus(LocusKind.VERTEX, region.index)
    else:
        locus = Locus(LocusKind.EDGE, region.index)
    steps = [TraceStep(n=1, k=k0, point=point, locus=locus)]
    state = RefinementState(k=k0, locus=locus, current=point)

    streak = 0
    while True:
        if len(steps) >= max_refine:
            return ProjectionTrace(
                q, tuple(steps), False, StopReason.MAX_REFINEMENTS_REACHED
            )
        if 2 * state.k > K_MAX:
            return ProjectionTrace(q, tuple(steps), False, StopReason.K_MAX_REACHED)

        k2 = 2 * state.k
        spec2 = PolygonSpec(params, k2)
        m = state.locus.index
        if state.locus.kind is LocusKind.EDGE:
            e0, e1 = (2 * m) % k2, (2 * m + 1) % k2
        else:
            e0, e1 = (2 * m - 1) % k2, (2 * m) % k2
        c0, c1 = _eval_pair(spec2, e0, e1, q)
        if c0.g < c1.g:
            chosen = c0
        elif c1.g < c0.g:
            chosen = c1
        else:
            # Equal distances: the shared vertex (start of edge e1) is the
            # projection whenever either candidate landed on it.
            shared = Locus(LocusKind.VERTEX, e1 % k2)
            if c0.locus == shared:
                chosen = c0
            elif c1.locus == shared:
                chosen = c1
            else:
                chosen = c0

        prev = state.current
        steps.append(TraceStep(n=len(steps) + 1, k=k2, point=chosen.point, locus=chosen.locus))
        state = RefinementState(k=k2, locus=chosen.locus, current=chosen.point)

        if tol is not None:
            delta = chosen.point.dist(prev)
            exact_stall = (
                chosen.locus.kind is LocusKind.VERTEX
                and chosen.point.x == prev.x
                and chosen.point.y == prev.y
            )
            local_chord = max(c0.chord, c1.chord)
            if delta >= tol:
                streak = 0
            elif not exact_stall or local_chord < tol:
                streak += 1
            if streak >= 2:
                return ProjectionTrace(q, tuple(steps), True, StopReason.TOLERANCE_MET)


def absolute_errors(trace: ProjectionTrace, reference: Point2) -> list[float]:
    """Euclidean distance from each recorded iterate to a reference point."""
    return [step.point.dist(reference) for step in trace.steps]
