"""Chain Ball cubic segments over a knot sequence into a G2 spline.

Each knot carries one point, one unit tangent and one signed curvature, so
curvature inheritance across a joint is structural: the knot's curvature is
both the end target of the left segment and the start target of the right
one. A segment depends only on its two end knots, which is what makes edits
local.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .errors import InfeasibleSegment, InvalidSpec, NoFeasiblePair, SingularPoint
from .geom import Point2, UnitVec2, normalize
from .segment import (
    BallSegment,
    G2EndData,
    SegmentParams,
    CHORD_TOL,
    control_points_from_g2,
    curvature,
    deriv1,
    evaluate,
)
from .solver import (
    DEFAULT_CONFIG,
    CandidatePair,
    SegmentCoefficients,
    SolverConfig,
    coefficients,
    select_default,
    solve_pairs,
)

DEFAULT_TOL_TANGENT = 1e-9
DEFAULT_TOL_KAPPA = 1e-6


@dataclass(frozen=True)
class KnotSpec:
    """One interpolation point with its unit tangent and signed curvature."""

    point: Point2
    tangent: UnitVec2
    kappa: float

    def __post_init__(self):
        if not math.isfinite(self.kappa):
            raise InvalidSpec(f"knot curvature must be finite, got {self.kappa}")


@dataclass(frozen=True)
class G2SplineSpec:
    knots: tuple[KnotSpec, ...]
    root_choice: Mapping[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "knots", tuple(self.knots))
        if len(self.knots) < 2:
            raise InvalidSpec(f"need at least 2 knots, got {len(self.knots)}")
        for i in range(len(self.knots) - 1):
            gap = (self.knots[i + 1].point - self.knots[i].point).norm()
            if gap <= CHORD_TOL:
                raise InvalidSpec(f"knots {i} and {i + 1} coincide")
        if self.root_choice is not None:
            nseg = len(self.knots) - 1
            for seg_idx, cand_idx in self.root_choice.items():
                if not (isinstance(seg_idx, int) and 0 <= seg_idx < nseg):
                    raise InvalidSpec(f"root_choice segment index {seg_idx!r} out of range")
                if not (isinstance(cand_idx, int) and cand_idx >= 0):
                    raise InvalidSpec(f"root_choice candidate index {cand_idx!r} invalid")

    @property
    def segment_count(self) -> int:
        return len(self.knots) - 1


@dataclass(frozen=True)
class SplineSegment:
    """One solved piece: geometry, chosen parameters, and the full candidate list."""

    ball: BallSegment
    params: SegmentParams
    candidate: CandidatePair
    candidates: tuple[CandidatePair, ...]
    chosen: int
    coeffs: SegmentCoefficients
    data: G2EndData


@dataclass(frozen=True)
class G2Spline:
    segments: tuple[SplineSegment, ...]
    spec: G2SplineSpec


@dataclass(frozen=True)
class JointReport:
    position_gap: float
    tangent_gap: float
    kappa_gap: float


@dataclass(frozen=True)
class G2Report:
    joints: tuple[JointReport, ...] = field(default_factory=tuple)
    passed: bool = True
    tol_tangent: float = DEFAULT_TOL_TANGENT
    tol_kappa: float = DEFAULT_TOL_KAPPA


def build_spline(spec: G2SplineSpec, config: SolverConfig = DEFAULT_CONFIG) -> G2Spline:
    """Solve every knot interval and assemble the piecewise curve.

    Raises InfeasibleSegment (with the failing index) when some interval
    admits no positive parameter pair, and InvalidSpec when a root_choice
    entry does not address an existing candidate.
    """
    segments: list[SplineSegment] = []
    choices = dict(spec.root_choice) if spec.root_choice else {}
    for i in range(spec.segment_count):
        left, right = spec.knots[i], spec.knots[i + 1]
        data = G2EndData(
            start=left.point,
            end=right.point,
            t_start=left.tangent,
            t_end=right.tangent,
            kappa_start=left.kappa,
            kappa_end=right.kappa,
        )
        try:
            candidates = solve_pairs(data, config)
        except NoFeasiblePair as exc:
            raise InfeasibleSegment(i, str(exc)) from exc
        if i in choices:
            chosen = choices[i]
            if chosen >= len(candidates):
                raise InvalidSpec(
                    f"root_choice[{i}]={chosen} but segment has {len(candidates)} candidates"
                )
        else:
            chosen = candidates.index(select_default(candidates, data.chord()))
        cand = candidates[chosen]
        params = SegmentParams(cand.alpha, cand.beta)
        segments.append(
            SplineSegment(
                ball=control_points_from_g2(data, params),
                params=params,
                candidate=cand,
                candidates=tuple(candidates),
                chosen=chosen,
                coeffs=coefficients(data),
                data=data,
            )
        )
    return G2Spline(segments=tuple(segments), spec=spec)


def verify_g2(
    spline: G2Spline,
    tol_tangent: float = DEFAULT_TOL_TANGENT,
    tol_kappa: float = DEFAULT_TOL_KAPPA,
) -> G2Report:
    """Measure position/tangent/curvature gaps at every interior joint.

    The curvature tolerance is applied relative to 1 + |kappa|.
    """
    joints: list[JointReport] = []
    passed = True
    for left, right in zip(spline.segments, spline.segments[1:]):
        p_left = evaluate(left.ball, 1.0)
        p_right = evaluate(right.ball, 0.0)
        position_gap = (p_right - p_left).norm()
        t_left = normalize(deriv1(left.ball, 1.0))
        t_right = normalize(deriv1(right.ball, 0.0))
        tangent_gap = math.hypot(t_right.m - t_left.m, t_right.n - t_left.n)
        k_left = curvature(left.ball, 1.0)
        k_right = curvature(right.ball, 0.0)
        kappa_gap = abs(k_right - k_left)
        joints.append(JointReport(position_gap, tangent_gap, kappa_gap))
        if (
            position_gap != 0.0
            or tangent_gap > tol_tangent
            or kappa_gap > tol_kappa * (1.0 + max(abs(k_left), abs(k_right)))
        ):
            passed = False
    return G2Report(tuple(joints), passed, tol_tangent, tol_kappa)


def curvature_profile(spline: G2Spline, samples_per_segment: int) -> list[tuple[float, float]]:
    """(global_t, kappa) at uniform parameters, including both joint limits."""
    if samples_per_segment < 2:
        raise ValueError("samples_per_segment must be at least 2")
    nseg = len(spline.segments)
    profile: list[tuple[float, float]] = []
    for i, seg in enumerate(spline.segments):
        for j in range(samples_per_segment):
            t = j / (samples_per_segment - 1)
            try:
                k = curvature(seg.ball, t)
            except SingularPoint as exc:
                raise SingularPoint(str(exc), segment_index=i, t=t) from exc
            profile.append(((i + t) / nseg, k))
    return profile
