from __future__ import annotations

import math
from pathlib import Path

import pytest

from ballkurve import (
    G2EndData,
    G2Spline,
    G2SplineSpec,
    KnotSpec,
    Point2,
    UnitVec2,
    build_spline,
)

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

SQRT2 = math.sqrt(2.0)

# Regression pins for the vase segments, derived with tests/oracle.py
# (grid scan + Newton on the numeric endpoint curvatures).
VASE_PARAMS = (
    (0.7088494442150531, 0.6538233945051215),
    (0.4714045207910317, 0.5773502691896257),
    (0.9702432259313577, 1.0769530283780768),
)


def vase_knots() -> tuple[KnotSpec, ...]:
    # SQRT2 / 2 is the fixed point of normalization for the diagonal direction,
    # so in-code knots match knots loaded from the JSON fixture bit for bit.
    return (
        KnotSpec(Point2(1.0, 0.0), UnitVec2(1.0, 0.0), 3.0),
        KnotSpec(Point2(3.5, 5.0), UnitVec2(0.0, 1.0), 1.0),
        KnotSpec(Point2(0.5, 9.0), UnitVec2(0.0, 1.0), -1.5),
        KnotSpec(Point2(2.0, 12.0), UnitVec2(SQRT2 / 2.0, SQRT2 / 2.0), -1.0),
    )


@pytest.fixture
def vase_spec() -> G2SplineSpec:
    return G2SplineSpec(knots=vase_knots())


@pytest.fixture
def vase_spline(vase_spec) -> G2Spline:
    return build_spline(vase_spec)


@pytest.fixture
def vase_path() -> Path:
    return FIXTURES / "vase.json"


@pytest.fixture
def quadrant_data() -> G2EndData:
    return G2EndData(
        start=Point2(0.0, 0.0),
        end=Point2(1.0, 1.0),
        t_start=UnitVec2(1.0, 0.0),
        t_end=UnitVec2(0.0, 1.0),
        kappa_start=4.0,
        kappa_end=4.0,
    )


@pytest.fixture
def vase_middle_data() -> G2EndData:
    return G2EndData(
        start=Point2(3.5, 5.0),
        end=Point2(0.5, 9.0),
        t_start=UnitVec2(0.0, 1.0),
        t_end=UnitVec2(0.0, 1.0),
        kappa_start=1.0,
        kappa_end=-1.5,
    )


@pytest.fixture
def two_candidate_data() -> G2EndData:
    return G2EndData(
        start=Point2(0.0, 0.0),
        end=Point2(1.0, 0.0),
        t_start=UnitVec2(1.0 / SQRT2, -1.0 / SQRT2),
        t_end=UnitVec2(0.5, math.sqrt(3.0) / 2.0),
        kappa_start=0.5,
        kappa_end=1.0,
    )
