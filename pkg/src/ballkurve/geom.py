"""Minimal exact-contract planar vector algebra shared by the whole kernel."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroVector

# Rejection threshold for normalization and unit-norm validation.
UNIT_TOL = 1e-12


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} requires finite components, got {values!r}")


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        _require_finite("Point2", self.x, self.y)

    def __sub__(self, other: "Point2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: "Vec2") -> "Point2":
        return Point2(self.x + v.dx, self.y + v.dy)


@dataclass(frozen=True)
class Vec2:
    dx: float
    dy: float

    def __post_init__(self):
        _require_finite("Vec2", self.dx, self.dy)

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.dx * s, self.dy * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.dx, -self.dy)

    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)


@dataclass(frozen=True)
class UnitVec2:
    """A direction; construction rejects non-unit input instead of renormalizing."""

    m: float
    n: float

    def __post_init__(self):
        _require_finite("UnitVec2", self.m, self.n)
        if abs(self.m * self.m + self.n * self.n - 1.0) > UNIT_TOL:
            raise ValueError(f"UnitVec2 components must have unit norm: ({self.m}, {self.n})")

    def as_vec(self) -> Vec2:
        return Vec2(self.m, self.n)

    def scaled(self, s: float) -> Vec2:
        return Vec2(self.m * s, self.n * s)


@dataclass(frozen=True)
class Affine2:
    """Planar affine map: row-major 2x2 linear part plus a translation."""

    m00: float
    m01: float
    m10: float
    m11: float
    tx: float = 0.0
    ty: float = 0.0

    def __post_init__(self):
        _require_finite("Affine2", self.m00, self.m01, self.m10, self.m11, self.tx, self.ty)

    @staticmethod
    def identity() -> "Affine2":
        return Affine2(1.0, 0.0, 0.0, 1.0, 0.0, 0.0)

    @staticmethod
    def translation(dx: float, dy: float) -> "Affine2":
        return Affine2(1.0, 0.0, 0.0, 1.0, dx, dy)

    @staticmethod
    def rotation(angle: float) -> "Affine2":
        c, s = math.cos(angle), math.sin(angle)
        return Affine2(c, -s, s, c, 0.0, 0.0)

    @staticmethod
    def scaling(sx: float, sy: float | None = None) -> "Affine2":
        sy = sx if sy is None else sy
        return Affine2(sx, 0.0, 0.0, sy, 0.0, 0.0)

    def determinant(self) -> float:
        return self.m00 * self.m11 - self.m01 * self.m10

    def compose(self, other: "Affine2") -> "Affine2":
        """Map equal to applying ``other`` first, then ``self``."""
        return Affine2(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
            self.m00 * other.tx + self.m01 * other.ty + self.tx,
            self.m10 * other.tx + self.m11 * other.ty + self.ty,
        )


def cross2(u: Vec2, v: Vec2) -> float:
    """Planar cross product u.dx*v.dy - u.dy*v.dx."""
    return u.dx * v.dy - u.dy * v.dx


def dot2(u: Vec2, v: Vec2) -> float:
    return u.dx * v.dx + u.dy * v.dy


def normalize(v: Vec2) -> UnitVec2:
    """Unit direction of v; raises ZeroVector for norms at or below 1e-12."""
    n = v.norm()
    if n <= UNIT_TOL:
        raise ZeroVector(f"cannot normalize near-zero vector ({v.dx}, {v.dy})")
    return UnitVec2(v.dx / n, v.dy / n)


def apply_affine(a: Affine2, p: Point2) -> Point2:
    return Point2(
        a.m00 * p.x + a.m01 * p.y + a.tx,
        a.m10 * p.x + a.m11 * p.y + a.ty,
    )
