"""ballkurve: a planar G2 spline kernel on the Ball cubic basis.

Interpolates points with prescribed unit tangents and signed curvatures by
solving, per segment, the two endpoint-curvature equations for the positive
shape parameters (alpha, beta), then exports curves as exact cubic SVG
paths, curvature combs, and OBJ surfaces of revolution.
"""

from .errors import (
    BallKurveError,
    DegenerateBranch,
    EmptyCandidates,
    InfeasibleSegment,
    InvalidParams,
    InvalidRadius,
    InvalidSpec,
    NoFeasiblePair,
    OutOfDomain,
    ProfileCrossesAxis,
    SingularPoint,
    ZeroPolynomial,
    ZeroVector,
)
from .geom import Affine2, Point2, UnitVec2, Vec2, apply_affine, cross2, dot2, normalize
from .segment import (
    BallSegment,
    G2EndData,
    SegmentParams,
    SignedRadius,
    ball_basis,
    control_points_from_g2,
    curvature,
    curvature_from_signed_radius,
    deriv1,
    deriv2,
    evaluate,
    kappa_end,
    kappa_start,
    reverse,
    to_bernstein,
)
from .solver import (
    CandidatePair,
    Quartic,
    SegmentCoefficients,
    SolverConfig,
    build_quartic,
    coefficients,
    real_roots,
    residuals,
    select_default,
    solve_pairs,
)
from .spline import (
    G2Report,
    G2Spline,
    G2SplineSpec,
    JointReport,
    KnotSpec,
    SplineSegment,
    build_spline,
    curvature_profile,
    verify_g2,
)
from .export import PolylineSample, RevolveConfig, fmt, revolve_obj, sample, to_svg
from .jsonio import load_spec, spec_from_dict, spec_to_dict

__version__ = "0.1.0"

__all__ = [
    "Affine2",
    "BallKurveError",
    "BallSegment",
    "CandidatePair",
    "DegenerateBranch",
    "EmptyCandidates",
    "G2EndData",
    "G2Report",
    "G2Spline",
    "G2SplineSpec",
    "InfeasibleSegment",
    "InvalidParams",
    "InvalidRadius",
    "InvalidSpec",
    "JointReport",
    "KnotSpec",
    "NoFeasiblePair",
    "OutOfDomain",
    "Point2",
    "PolylineSample",
    "ProfileCrossesAxis",
    "Quartic",
    "RevolveConfig",
    "SegmentCoefficients",
    "SegmentParams",
    "SignedRadius",
    "SingularPoint",
    "SolverConfig",
    "SplineSegment",
    "UnitVec2",
    "Vec2",
    "ZeroPolynomial",
    "ZeroVector",
    "apply_affine",
    "ball_basis",
    "build_quartic",
    "build_spline",
    "coefficients",
    "control_points_from_g2",
    "cross2",
    "curvature",
    "curvature_from_signed_radius",
    "curvature_profile",
    "deriv1",
    "deriv2",
    "dot2",
    "evaluate",
    "fmt",
    "kappa_end",
    "kappa_start",
    "load_spec",
    "normalize",
    "real_roots",
    "residuals",
    "reverse",
    "revolve_obj",
    "sample",
    "select_default",
    "solve_pairs",
    "spec_from_dict",
    "spec_to_dict",
    "to_bernstein",
    "to_svg",
    "verify_g2",
]
