"""Deterministic serialization: sampled polylines, SVG documents, OBJ meshes.

All numeric output uses fixed 9-significant-digit decimal formatting with no
scientific notation, so identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal

import numpy as np

from .errors import ProfileCrossesAxis, SingularPoint
from .segment import curvature, deriv1, evaluate, to_bernstein
from .spline import G2Spline

CURVE_STROKE = "#1a1a1a"
COMB_STROKE = "#cc3333"


@dataclass(frozen=True)
class PolylineSample:
    """Sampled spline: point rows with per-point curvature, tangent and global t."""

    points: np.ndarray    # (n, 2)
    kappa: np.ndarray     # (n,)
    tangents: np.ndarray  # (n, 2), unit rows
    global_t: np.ndarray  # (n,), nondecreasing in [0, 1]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a polyline needs at least 2 points")


@dataclass(frozen=True)
class RevolveConfig:
    """Surface-of-revolution settings; the axis is fixed to the y-axis."""

    angular_steps: int = 64
    samples_per_segment: int = 10

    def __post_init__(self):
        if self.angular_steps < 3:
            raise ValueError(f"angular_steps must be >= 3, got {self.angular_steps}")
        if self.samples_per_segment < 2:
            raise ValueError(f"samples_per_segment must be >= 2, got {self.samples_per_segment}")


def fmt(x: float) -> str:
    """Fixed decimal with 9 significant digits; never scientific notation."""
    if x == 0.0:
        return "0"
    s = f"{x:.9g}"
    if "e" in s or "E" in s:
        s = format(Decimal(s), "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s if s else "0"


def sample(spline: G2Spline, n_per_segment: int) -> PolylineSample:
    """Uniform-t samples; each interior joint appears exactly once."""
    if n_per_segment < 2:
        raise ValueError("n_per_segment must be at least 2")
    nseg = len(spline.segments)
    pts: list[tuple[float, float]] = []
    kap: list[float] = []
    tan: list[tuple[float, float]] = []
    gts: list[float] = []
    for i, seg in enumerate(spline.segments):
        start_j = 1 if i > 0 else 0  # joint point already emitted by the left segment
        for j in range(start_j, n_per_segment):
            t = j / (n_per_segment - 1)
            p = evaluate(seg.ball, t)
            d = deriv1(seg.ball, t)
            speed = d.norm()
            if speed <= 1e-9:
                raise SingularPoint(f"vanishing speed at t={t}", segment_index=i, t=t)
            pts.append((p.x, p.y))
            kap.append(curvature(seg.ball, t))
            tan.append((d.dx / speed, d.dy / speed))
            gts.append((i + t) / nseg)
    return PolylineSample(
        points=np.array(pts, dtype=float),
        kappa=np.array(kap, dtype=float),
        tangents=np.array(tan, dtype=float),
        global_t=np.array(gts, dtype=float),
    )


def _comb_lines(spline: G2Spline, scale: float, density: int) -> list[tuple[float, float, float, float]]:
    """Comb segment endpoints: p(t) to p(t) + scale * kappa * left_normal."""
    lines = []
    for i, seg in enumerate(spline.segments):
        for j in range(density):
            t = j / (density - 1) if density > 1 else 0.0
            p = evaluate(seg.ball, t)
            d = deriv1(seg.ball, t)
            speed = d.norm()
            if speed <= 1e-9:
                raise SingularPoint(f"vanishing speed at t={t}", segment_index=i, t=t)
            k = curvature(seg.ball, t)
            nx, ny = -d.dy / speed, d.dx / speed
            lines.append((p.x, p.y, p.x + scale * k * nx, p.y + scale * k * ny))
    return lines


def to_svg(
    spline: G2Spline,
    comb: bool = False,
    comb_scale: float = 1.0,
    comb_density: int = 10,
) -> str:
    """SVG document with one exact cubic path per segment and an optional comb.

    The model's y axis points up; a top-level scale(1 -1) keeps paths in
    model coordinates while the document displays upright.
    """
    beziers = [to_bernstein(seg.ball) for seg in spline.segments]
    xs = [p.x for bz in beziers for p in bz]
    ys = [p.y for bz in beziers for p in bz]
    comb_lines: list[tuple[float, float, float, float]] = []
    if comb:
        comb_lines = _comb_lines(spline, comb_scale, comb_density)
        for x1, y1, x2, y2 in comb_lines:
            xs.extend((x1, x2))
            ys.extend((y1, y2))

    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-6)
    margin = 0.05 * span
    width = (max_x - min_x) + 2 * margin
    height = (max_y - min_y) + 2 * margin
    view_box = (
        f"{fmt(min_x - margin)} {fmt(-(max_y + margin))} {fmt(width)} {fmt(height)}"
    )
    stroke_w = fmt(0.01 * span)
    comb_w = fmt(0.005 * span)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view_box}">',
        '<g transform="scale(1 -1)">',
    ]
    for x1, y1, x2, y2 in comb_lines:
        out.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="{COMB_STROKE}" stroke-width="{comb_w}"/>'
        )
    for b0, b1, b2, b3 in beziers:
        d_attr = (
            f"M {fmt(b0.x)} {fmt(b0.y)} "
            f"C {fmt(b1.x)} {fmt(b1.y)} {fmt(b2.x)} {fmt(b2.y)} {fmt(b3.x)} {fmt(b3.y)}"
        )
        out.append(
            f'<path d="{d_attr}" fill="none" stroke="{CURVE_STROKE}" stroke-width="{stroke_w}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def revolve_obj(spline: G2Spline, cfg: RevolveConfig = RevolveConfig()) -> str:
    """Wavefront OBJ mesh of the profile revolved around the y-axis.

    Vertices are (x*cos, y, x*sin) rings per profile sample; faces are quads
    with 1-based indices and wrap-around in the angular direction.
    """
    profile = sample(spline, cfg.samples_per_segment)
    for i, (x, _y) in enumerate(profile.points):
        if x < -1e-9:
            raise ProfileCrossesAxis(
                f"profile sample {i} has x={x}; the profile must stay on one side of the axis"
            )

    steps = cfg.angular_steps
    lines: list[str] = []
    for x, y in profile.points:
        for j in range(steps):
            theta = 2.0 * math.pi * j / steps
            lines.append(f"v {fmt(x * math.cos(theta))} {fmt(y)} {fmt(x * math.sin(theta))}")
    n_profile = len(profile.points)
    for i in range(n_profile - 1):
        base = i * steps
        nxt = (i + 1) * steps
        for j in range(steps):
            j1 = (j + 1) % steps
            lines.append(f"f {base + j + 1} {nxt + j + 1} {nxt + j1 + 1} {base + j1 + 1}")
    return "\n".join(lines) + "\n"
