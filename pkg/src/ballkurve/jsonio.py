"""JSON wire formats: the on-disk spline spec and the solve/sample responses.

The spec document is the document of record for a design:

    {"knots": [{"point": [x, y],
                "tangent": [m, n],
                "kappa": k            (or "signed_radius": {"sign": +-1, "radius": r})},
               ...],
     "root_choice": {"<segment_index>": <candidate_index>}}   (optional)

Tangents are normalized on load; a warning is emitted when the input needed
renormalization by more than 1e-9.
"""

from __future__ import annotations

import json
import math
import warnings
from pathlib import Path
from typing import Any

from .errors import InvalidSpec, ZeroVector
from .export import PolylineSample
from .geom import Point2, Vec2, normalize
from .segment import SegmentParams, control_points_from_g2, to_bernstein
from .solver import SolverConfig
from .spline import G2Report, G2Spline, G2SplineSpec, KnotSpec, build_spline, verify_g2


class TangentRenormalizedWarning(UserWarning):
    """An input tangent was further than 1e-9 from unit length."""


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidSpec(f"{where}: expected a number, got {value!r}")
    f = float(value)
    if not math.isfinite(f):
        raise InvalidSpec(f"{where}: value must be finite, got {value!r}")
    return f


def _pair(value: Any, where: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise InvalidSpec(f"{where}: expected [x, y], got {value!r}")
    return (_number(value[0], where), _number(value[1], where))


def _knot_from_dict(entry: Any, index: int) -> KnotSpec:
    where = f"knots[{index}]"
    if not isinstance(entry, dict):
        raise InvalidSpec(f"{where}: expected an object, got {entry!r}")
    px, py = _pair(entry.get("point"), f"{where}.point")
    tm, tn = _pair(entry.get("tangent"), f"{where}.tangent")
    try:
        tangent = normalize(Vec2(tm, tn))
    except ZeroVector as exc:
        raise InvalidSpec(f"{where}.tangent: zero vector") from exc
    drift = abs(math.hypot(tm, tn) - 1.0)
    if drift > 1e-9:
        warnings.warn(
            f"{where}.tangent renormalized (off by {drift:.3g})",
            TangentRenormalizedWarning,
            stacklevel=3,
        )

    has_kappa = "kappa" in entry
    has_radius = "signed_radius" in entry
    if has_kappa == has_radius:
        raise InvalidSpec(f"{where}: provide exactly one of 'kappa' or 'signed_radius'")
    if has_kappa:
        kappa = _number(entry["kappa"], f"{where}.kappa")
    else:
        sr = entry["signed_radius"]
        if not isinstance(sr, dict):
            raise InvalidSpec(f"{where}.signed_radius: expected an object")
        sign = sr.get("sign")
        if sign not in (1, -1):
            raise InvalidSpec(f"{where}.signed_radius.sign: must be 1 or -1, got {sign!r}")
        radius = _number(sr.get("radius"), f"{where}.signed_radius.radius")
        if radius <= 0.0:
            raise InvalidSpec(f"{where}.signed_radius.radius: must be positive, got {radius}")
        kappa = sign / radius
    return KnotSpec(point=Point2(px, py), tangent=tangent, kappa=kappa)


def spec_from_dict(doc: Any) -> G2SplineSpec:
    if not isinstance(doc, dict):
        raise InvalidSpec(f"spec root must be an object, got {type(doc).__name__}")
    knots_raw = doc.get("knots")
    if not isinstance(knots_raw, list) or len(knots_raw) < 2:
        raise InvalidSpec("spec needs a 'knots' array with at least 2 entries")
    knots = tuple(_knot_from_dict(entry, i) for i, entry in enumerate(knots_raw))

    root_choice = None
    if "root_choice" in doc and doc["root_choice"] is not None:
        rc_raw = doc["root_choice"]
        if not isinstance(rc_raw, dict):
            raise InvalidSpec("root_choice must be an object of segment -> candidate indices")
        root_choice = {}
        for key, value in rc_raw.items():
            try:
                seg_idx = int(key)
            except (TypeError, ValueError):
                raise InvalidSpec(f"root_choice key {key!r} is not a segment index") from None
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidSpec(f"root_choice[{key!r}] must be an integer index")
            root_choice[seg_idx] = value
    return G2SplineSpec(knots=knots, root_choice=root_choice)


def load_spec(path: str | Path) -> G2SplineSpec:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"{path}: not valid JSON ({exc})") from exc
    return spec_from_dict(doc)


def spec_to_dict(spec: G2SplineSpec) -> dict:
    doc: dict[str, Any] = {
        "knots": [
            {
                "point": [k.point.x, k.point.y],
                "tangent": [k.tangent.m, k.tangent.n],
                "kappa": k.kappa,
            }
            for k in spec.knots
        ]
    }
    if spec.root_choice:
        doc["root_choice"] = {str(i): int(c) for i, c in sorted(spec.root_choice.items())}
    return doc


def config_from_options(residual_tol: float | None = None, alpha_max: float | None = None) -> SolverConfig:
    kwargs = {}
    if residual_tol is not None:
        kwargs["residual_tol"] = residual_tol
    if alpha_max is not None:
        kwargs["alpha_max"] = alpha_max
    return SolverConfig(**kwargs)


def report_to_dict(report: G2Report) -> dict:
    return {
        "pass": report.passed,
        "joints": [
            {
                "position_gap": j.position_gap,
                "tangent_gap": j.tangent_gap,
                "kappa_gap": j.kappa_gap,
            }
            for j in report.joints
        ],
    }


def solve_response(spline: G2Spline, report: G2Report) -> dict:
    segments = []
    for seg in spline.segments:
        candidates = []
        for c in seg.candidates:
            ball = control_points_from_g2(seg.data, SegmentParams(c.alpha, c.beta))
            candidates.append(
                {
                    "alpha": c.alpha,
                    "beta": c.beta,
                    "residual0": c.residual0,
                    "residual1": c.residual1,
                    "underdetermined": c.underdetermined,
                    "control_points": _point_rows(ball),
                    "bernstein": [[p.x, p.y] for p in to_bernstein(ball)],
                }
            )
        segments.append(
            {
                "coefficients": {"a": seg.coeffs.a, "b": seg.coeffs.b, "d": seg.coeffs.d},
                "candidates": candidates,
                "chosen": seg.chosen,
                "params": {"alpha": seg.params.alpha, "beta": seg.params.beta},
                "control_points": _point_rows(seg.ball),
                "bernstein": [[p.x, p.y] for p in to_bernstein(seg.ball)],
            }
        )
    return {"segments": segments, "report": report_to_dict(report)}


def _point_rows(ball) -> list[list[float]]:
    return [[p.x, p.y] for p in (ball.p0, ball.p1, ball.p2, ball.p3)]


def sample_response(ps: PolylineSample) -> dict:
    return {
        "points": ps.points.tolist(),
        "kappa": ps.kappa.tolist(),
        "tangents": ps.tangents.tolist(),
        "global_t": ps.global_t.tolist(),
    }


def solve_to_response(spec: G2SplineSpec, config: SolverConfig) -> tuple[G2Spline, dict]:
    """Build the spline and its full wire response; exceptions propagate."""
    spline = build_spline(spec, config)
    report = verify_g2(spline)
    return spline, solve_response(spline, report)


def error_payload(code: str, message: str, segment: int | None = None) -> dict:
    err: dict[str, Any] = {"code": code, "message": message}
    if segment is not None:
        err["segment"] = segment
    return {"error": err}
