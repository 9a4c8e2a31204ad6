"""The Ball cubic: evaluation, derivatives, curvature, and G2 end-data synthesis.

A Ball cubic over control points (p0, p1, p2, p3) is

    B(t) = (1-t)^2 p0 + 2t(1-t)^2 p1 + 2t^2(1-t) p2 + t^2 p3,   t in [0, 1].

The basis is a nonnegative partition of unity on [0, 1], so the curve
interpolates its end points, lies in the convex hull of its control points,
and transforms covariantly under affine maps.

For design input the inner control points are placed along given unit end
tangents at distances 1/alpha and 1/beta, which makes the end speeds 2/alpha
and 2/beta and yields closed forms for the signed end curvatures in terms of
(alpha, beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParams, InvalidRadius, OutOfDomain, SingularPoint
from .geom import Point2, UnitVec2, Vec2, cross2

T_TOL = 1e-12
# Below this speed a point is treated as a cusp rather than returning huge curvature.
SPEED_TOL = 1e-9
# Minimum chord length for usable G2 end data.
CHORD_TOL = 1e-12


@dataclass(frozen=True)
class BallSegment:
    p0: Point2
    p1: Point2
    p2: Point2
    p3: Point2


@dataclass(frozen=True)
class G2EndData:
    """End conditions for one segment: points, unit tangents, signed curvatures."""

    start: Point2
    end: Point2
    t_start: UnitVec2
    t_end: UnitVec2
    kappa_start: float
    kappa_end: float

    def __post_init__(self):
        if not (math.isfinite(self.kappa_start) and math.isfinite(self.kappa_end)):
            raise ValueError("curvature targets must be finite")
        if self.chord() <= CHORD_TOL:
            raise ValueError("start and end points of a segment must be distinct")

    def chord(self) -> float:
        return (self.end - self.start).norm()


@dataclass(frozen=True)
class SegmentParams:
    """Positive shape parameters; end speeds are 2/alpha and 2/beta."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise InvalidParams(f"alpha must be positive and finite, got {self.alpha}")
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise InvalidParams(f"beta must be positive and finite, got {self.beta}")


@dataclass(frozen=True)
class SignedRadius:
    """Curvature stated as a side (+1 left, -1 right) and an osculating radius."""

    sign: int
    radius: float

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidRadius(f"sign must be +1 or -1, got {self.sign}")
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise InvalidRadius(f"radius must be positive and finite, got {self.radius}")


def _check_t(t: float) -> None:
    if t < -T_TOL or t > 1.0 + T_TOL:
        raise OutOfDomain(f"parameter t={t} outside [0, 1]")


def ball_basis(t: float) -> tuple[float, float, float, float]:
    """The four Ball cubic basis values at t."""
    u = 1.0 - t
    return (u * u, 2.0 * t * u * u, 2.0 * t * t * u, t * t)


def evaluate(seg: BallSegment, t: float) -> Point2:
    _check_t(t)
    w0, w1, w2, w3 = ball_basis(t)
    return Point2(
        w0 * seg.p0.x + w1 * seg.p1.x + w2 * seg.p2.x + w3 * seg.p3.x,
        w0 * seg.p0.y + w1 * seg.p1.y + w2 * seg.p2.y + w3 * seg.p3.y,
    )


def deriv1(seg: BallSegment, t: float) -> Vec2:
    _check_t(t)
    u = 1.0 - t
    w0 = -2.0 * u
    w1 = 2.0 * u * (1.0 - 3.0 * t)
    w2 = 2.0 * t * (2.0 - 3.0 * t)
    w3 = 2.0 * t
    return Vec2(
        w0 * seg.p0.x + w1 * seg.p1.x + w2 * seg.p2.x + w3 * seg.p3.x,
        w0 * seg.p0.y + w1 * seg.p1.y + w2 * seg.p2.y + w3 * seg.p3.y,
    )


def deriv2(seg: BallSegment, t: float) -> Vec2:
    _check_t(t)
    w1 = 2.0 * (6.0 * t - 4.0)
    w2 = 2.0 * (2.0 - 6.0 * t)
    return Vec2(
        2.0 * seg.p0.x + w1 * seg.p1.x + w2 * seg.p2.x + 2.0 * seg.p3.x,
        2.0 * seg.p0.y + w1 * seg.p1.y + w2 * seg.p2.y + 2.0 * seg.p3.y,
    )


def curvature(seg: BallSegment, t: float) -> float:
    """Signed curvature cross(B', B'') / |B'|^3; positive turns left."""
    d1 = deriv1(seg, t)
    speed = d1.norm()
    if speed <= SPEED_TOL:
        raise SingularPoint(f"vanishing speed at t={t}", t=t)
    return cross2(d1, deriv2(seg, t)) / speed**3


def control_points_from_g2(data: G2EndData, params: SegmentParams) -> BallSegment:
    """Inner control points placed along the end tangents at 1/alpha and 1/beta."""
    p1 = data.start + data.t_start.scaled(1.0 / params.alpha)
    p2 = data.end + data.t_end.scaled(-1.0 / params.beta)
    return BallSegment(data.start, p1, p2, data.end)


def kappa_start(data: G2EndData, params: SegmentParams) -> float:
    """Closed-form signed curvature at t=0 of the segment built from (alpha, beta)."""
    al, be = params.alpha, params.beta
    m0, n0 = data.t_start.m, data.t_start.n
    m1, n1 = data.t_end.m, data.t_end.n
    x0, y0 = data.start.x, data.start.y
    x1, y1 = data.end.x, data.end.y
    bracket = 2.0 * (m1 * n0 - m0 * n1) + 3.0 * be * (n0 * (x0 - x1) + m0 * (y1 - y0))
    return al * al * bracket / (2.0 * be)


def kappa_end(data: G2EndData, params: SegmentParams) -> float:
    """Closed-form signed curvature at t=1 of the segment built from (alpha, beta)."""
    al, be = params.alpha, params.beta
    m0, n0 = data.t_start.m, data.t_start.n
    m1, n1 = data.t_end.m, data.t_end.n
    x0, y0 = data.start.x, data.start.y
    x1, y1 = data.end.x, data.end.y
    bracket = n1 * (3.0 * (x1 - x0) * al - 2.0 * m0) + m1 * (3.0 * (y0 - y1) * al + 2.0 * n0)
    return be * be * bracket / (2.0 * al)


def curvature_from_signed_radius(sr: SignedRadius) -> float:
    return sr.sign / sr.radius


def to_bernstein(seg: BallSegment) -> tuple[Point2, Point2, Point2, Point2]:
    """Control points of the identical cubic in the Bernstein basis."""
    b1 = Point2((seg.p0.x + 2.0 * seg.p1.x) / 3.0, (seg.p0.y + 2.0 * seg.p1.y) / 3.0)
    b2 = Point2((2.0 * seg.p2.x + seg.p3.x) / 3.0, (2.0 * seg.p2.y + seg.p3.y) / 3.0)
    return (seg.p0, b1, b2, seg.p3)


def reverse(seg: BallSegment) -> BallSegment:
    """The same point set traversed backwards: eval(reverse(seg), t) = eval(seg, 1-t)."""
    return BallSegment(seg.p3, seg.p2, seg.p1, seg.p0)
