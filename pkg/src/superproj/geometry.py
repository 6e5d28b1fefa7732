"""Planar superellipse geometry.

A superellipse with semi-axes ``a, b > 0`` and exponent ``p > 1`` is the
level set ``|x/a|^p + |y/b|^p = 1``; the region it bounds is strictly
convex.  This module provides the weighted p-norm that defines the shape,
membership classification for the closed region, the radial maps between
the unit circle and the curve, and the angular parameterization used
everywhere else in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi

# Width of the band around the level set classified as ON_BOUNDARY.
TOL_BOUNDARY = 1e-9
# Accepted deviation of phi() inputs from the unit circle.
EPS_UNIT = 1e-9
# Accepted deviation of psi() inputs from the curve.
EPS_CURVE = 1e-9


@dataclass(frozen=True)
class Point2:
    """Immutable planar point with the handful of vector ops we need."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Point2":
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class SuperellipseParams:
    """Shape parameters; validation rejects anything outside a > 0, b > 0, p > 1."""

    a: float
    b: float
    p: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "p"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
        if self.a <= 0.0 or self.b <= 0.0:
            raise ValueError(f"semi-axes must be positive, got a={self.a}, b={self.b}")
        if self.p <= 1.0:
            raise ValueError(f"exponent must exceed 1, got p={self.p}")


class Membership(Enum):
    STRICT_INTERIOR = "strict_interior"
    ON_BOUNDARY = "on_boundary"
    EXTERIOR = "exterior"


def constraint_value(params: SuperellipseParams, q: Point2) -> float:
    """Evaluate |x/a|^p + |y/b|^p at q; the region is the sublevel set at 1."""
    return (abs(q.x) / params.a) ** params.p + (abs(q.y) / params.b) ** params.p


def weighted_p_norm(params: SuperellipseParams, q: Point2) -> float:
    """The norm whose unit sphere is the superellipse: constraint_value**(1/p)."""
    return constraint_value(params, q) ** (1.0 / params.p)


def disk_membership(
    params: SuperellipseParams, q: Point2, tol: float = TOL_BOUNDARY
) -> Membership:
    """Classify q against the closed region, with a tol band around the curve."""
    s = constraint_value(params, q)
    if s < 1.0 - tol:
        return Membership.STRICT_INTERIOR
    if s <= 1.0 + tol:
        return Membership.ON_BOUNDARY
    return Membership.EXTERIOR


def phi(params: SuperellipseParams, u: Point2, eps: float = EPS_UNIT) -> Point2:
    """Radial map from the unit circle onto the curve: u / ||u||_p.

    pre: ``| ||u||_2 - 1 | <= eps``.  The map is a homeomorphism between the
    circle and the curve; its inverse is :func:`psi`.
    """
    if abs(u.norm() - 1.0) > eps:
        raise ValueError(f"phi expects a unit vector, got ||u|| = {u.norm()!r}")
    n = weighted_p_norm(params, u)
    return Point2(u.x / n, u.y / n)


def psi(params: SuperellipseParams, q: Point2, eps: float = EPS_CURVE) -> Point2:
    """Radial map from the curve back onto the unit circle: q / ||q||_2.

    pre: ``|constraint_value(q) - 1| <= eps``.
    """
    if abs(constraint_value(params, q) - 1.0) > eps:
        raise ValueError(f"psi expects a curve point, got constraint {constraint_value(params, q)!r}")
    n = q.norm()
    return Point2(q.x / n, q.y / n)


def boundary_point(params: SuperellipseParams, theta: float) -> Point2:
    """Curve point in direction theta: phi((cos theta, sin theta)).

    theta is reduced mod 2*pi first; any finite value is accepted.
    """
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")
    theta = theta % TWO_PI
    u = Point2(math.cos(theta), math.sin(theta))
    n = weighted_p_norm(params, u)
    return Point2(u.x / n, u.y / n)
