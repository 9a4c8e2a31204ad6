"""Shared test utilities: independent curve math and small geometry checks."""

from __future__ import annotations

import math
import re

import numpy as np

from ballkurve import BallSegment, G2EndData, Point2, UnitVec2


def bernstein_point(bz, t: float) -> tuple[float, float]:
    """Cubic Bernstein evaluation, written independently of the package."""
    b0, b1, b2, b3 = bz
    u = 1.0 - t
    w = (u**3, 3.0 * t * u * u, 3.0 * t * t * u, t**3)
    xs = (b0[0], b1[0], b2[0], b3[0]) if isinstance(b0, (tuple, list)) else (b0.x, b1.x, b2.x, b3.x)
    ys = (b0[1], b1[1], b2[1], b3[1]) if isinstance(b0, (tuple, list)) else (b0.y, b1.y, b2.y, b3.y)
    return (sum(wi * xi for wi, xi in zip(w, xs)), sum(wi * yi for wi, yi in zip(w, ys)))


def convex_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Monotone chain; returns CCW hull vertices without repetition."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out: list[tuple[float, float]] = []
        for p in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def point_in_hull(p: tuple[float, float], hull_points: list[tuple[float, float]], tol: float) -> bool:
    hull = convex_hull(hull_points)
    if len(hull) == 1:
        return math.dist(p, hull[0]) <= tol
    if len(hull) == 2:
        return _point_segment_distance(p, hull[0], hull[1]) <= tol
    for (ax, ay), (bx, by) in zip(hull, hull[1:] + hull[:1]):
        if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) < -tol * max(1.0, math.dist((ax, ay), (bx, by))):
            return False
    return True


def _point_segment_distance(p, a, b) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    vx, vy = bx - ax, by - ay
    denom = vx * vx + vy * vy
    if denom == 0.0:
        return math.dist(p, a)
    t = max(0.0, min(1.0, ((px - ax) * vx + (py - ay) * vy) / denom))
    return math.dist(p, (ax + t * vx, ay + t * vy))


def sign_changes(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0.0]
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def random_segment(rng: np.random.Generator, lo: float = -10.0, hi: float = 10.0) -> BallSegment:
    p = rng.uniform(lo, hi, (4, 2))
    return BallSegment(*(Point2(float(x), float(y)) for x, y in p))


def random_unit(rng: np.random.Generator) -> UnitVec2:
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return UnitVec2(math.cos(theta), math.sin(theta))


def random_g2_data(rng: np.random.Generator, kappa_range: float = 5.0) -> G2EndData:
    while True:
        s = rng.uniform(-5.0, 5.0, 2)
        e = rng.uniform(-5.0, 5.0, 2)
        if math.hypot(e[0] - s[0], e[1] - s[1]) > 1e-3:
            break
    return G2EndData(
        start=Point2(float(s[0]), float(s[1])),
        end=Point2(float(e[0]), float(e[1])),
        t_start=random_unit(rng),
        t_end=random_unit(rng),
        kappa_start=float(rng.uniform(-kappa_range, kappa_range)),
        kappa_end=float(rng.uniform(-kappa_range, kappa_range)),
    )


_PATH_RE = re.compile(
    r'<path d="M (\S+) (\S+) C (\S+) (\S+) (\S+) (\S+) (\S+) (\S+)"'
)


def parse_svg_cubics(svg: str) -> list[list[tuple[float, float]]]:
    """Control points of every cubic path element in document order."""
    out = []
    for m in _PATH_RE.finditer(svg):
        vals = [float(v) for v in m.groups()]
        out.append([(vals[0], vals[1]), (vals[2], vals[3]), (vals[4], vals[5]), (vals[6], vals[7])])
    return out
