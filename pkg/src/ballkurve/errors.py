"""Exception hierarchy for the ballkurve kernel."""

from __future__ import annotations


class BallKurveError(Exception):
    """Base class for all kernel errors."""


class ZeroVector(BallKurveError):
    """Normalization of a (near-)zero vector was requested."""


class OutOfDomain(BallKurveError):
    """Curve parameter t lies outside [0, 1] beyond tolerance."""


class SingularPoint(BallKurveError):
    """Curvature requested at a point where the speed vanishes (cusp).

    Carries the offending location when raised from a spline-level
    operation: ``segment_index`` and ``t`` are then set.
    """

    def __init__(self, message: str, segment_index: int | None = None, t: float | None = None):
        super().__init__(message)
        self.segment_index = segment_index
        self.t = t


class InvalidParams(BallKurveError):
    """Segment shape parameters must both be positive."""


class InvalidRadius(BallKurveError):
    """A signed radius must have a strictly positive radius."""


class DegenerateBranch(BallKurveError):
    """The quartic reduction does not apply; a closed-form branch must be used."""


class ZeroPolynomial(BallKurveError):
    """Root finding on the identically-zero polynomial."""


class NoFeasiblePair(BallKurveError):
    """No positive (alpha, beta) pair satisfies both endpoint-curvature equations."""


class EmptyCandidates(BallKurveError):
    """Default selection needs at least one candidate."""


class InvalidSpec(BallKurveError):
    """Malformed spline specification (schema or invariant violation)."""


class InfeasibleSegment(BallKurveError):
    """A segment of a spline spec admits no feasible parameter pair."""

    def __init__(self, segment_index: int, message: str):
        super().__init__(f"segment {segment_index}: {message}")
        self.segment_index = segment_index


class ProfileCrossesAxis(BallKurveError):
    """A profile point lies on the negative side of the revolution axis."""
