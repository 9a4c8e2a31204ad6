import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ballkurve import (
    Affine2,
    BallSegment,
    G2EndData,
    InvalidParams,
    InvalidRadius,
    OutOfDomain,
    Point2,
    SegmentParams,
    SignedRadius,
    SingularPoint,
    UnitVec2,
    apply_affine,
    ball_basis,
    control_points_from_g2,
    curvature,
    curvature_from_signed_radius,
    deriv1,
    deriv2,
    evaluate,
    kappa_end,
    kappa_start,
    normalize,
    reverse,
    to_bernstein,
)
from helpers import bernstein_point, point_in_hull, random_segment, sign_changes

EXAMPLE = BallSegment(Point2(0, 0), Point2(0.5, 0), Point2(1, 0.5), Point2(1, 1))


def seg_points(seg):
    return [(p.x, p.y) for p in (seg.p0, seg.p1, seg.p2, seg.p3)]


# --- evaluation -------------------------------------------------------------

def test_evaluate_interpolates_endpoints_exactly():
    rng = np.random.default_rng(1)
    for _ in range(50):
        seg = random_segment(rng)
        assert evaluate(seg, 0.0) == seg.p0
        assert evaluate(seg, 1.0) == seg.p3


def test_evaluate_midpoint_weights_all_quarter():
    seg = BallSegment(Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1))
    assert ball_basis(0.5) == (0.25, 0.25, 0.25, 0.25)
    assert evaluate(seg, 0.5) == Point2(0.5, 0.5)


def test_evaluate_rejects_out_of_domain():
    with pytest.raises(OutOfDomain):
        evaluate(EXAMPLE, -0.1)
    with pytest.raises(OutOfDomain):
        evaluate(EXAMPLE, 1.1)
    # within the 1e-12 tolerance band is fine
    evaluate(EXAMPLE, 1.0 + 1e-13)
    evaluate(EXAMPLE, -1e-13)


# --- derivatives ------------------------------------------------------------

def test_deriv1_collapses_at_ends():
    rng = np.random.default_rng(2)
    for _ in range(20):
        seg = random_segment(rng)
        d0 = deriv1(seg, 0.0)
        assert d0.dx == 2.0 * (seg.p1.x - seg.p0.x)
        assert d0.dy == 2.0 * (seg.p1.y - seg.p0.y)
        d1 = deriv1(seg, 1.0)
        assert d1.dx == 2.0 * (seg.p3.x - seg.p2.x)
        assert d1.dy == 2.0 * (seg.p3.y - seg.p2.y)


def test_deriv2_end_values():
    rng = np.random.default_rng(3)
    for _ in range(20):
        seg = random_segment(rng)
        d = deriv2(seg, 0.0)
        assert abs(d.dx - (2 * seg.p0.x - 8 * seg.p1.x + 4 * seg.p2.x + 2 * seg.p3.x)) <= 1e-12
        d = deriv2(seg, 1.0)
        assert abs(d.dx - (2 * seg.p0.x + 4 * seg.p1.x - 8 * seg.p2.x + 2 * seg.p3.x)) <= 1e-12


def test_deriv1_matches_finite_difference():
    rng = np.random.default_rng(4)
    h = 1e-6
    for _ in range(100):
        seg = random_segment(rng)
        t = rng.uniform(2 * h, 1 - 2 * h)
        fwd = evaluate(seg, t + h)
        bwd = evaluate(seg, t - h)
        fd = ((fwd.x - bwd.x) / (2 * h), (fwd.y - bwd.y) / (2 * h))
        d = deriv1(seg, t)
        scale = max(1.0, abs(d.dx), abs(d.dy))
        assert abs(fd[0] - d.dx) <= 1e-6 * scale
        assert abs(fd[1] - d.dy) <= 1e-6 * scale


def test_deriv2_matches_finite_difference_of_deriv1():
    rng = np.random.default_rng(5)
    h = 1e-6
    for _ in range(100):
        seg = random_segment(rng)
        t = rng.uniform(2 * h, 1 - 2 * h)
        fwd = deriv1(seg, t + h)
        bwd = deriv1(seg, t - h)
        fd = ((fwd.dx - bwd.dx) / (2 * h), (fwd.dy - bwd.dy) / (2 * h))
        d = deriv2(seg, t)
        scale = max(1.0, abs(d.dx), abs(d.dy))
        assert abs(fd[0] - d.dx) <= 1e-5 * scale
        assert abs(fd[1] - d.dy) <= 1e-5 * scale


# --- curvature --------------------------------------------------------------

def test_curvature_zero_on_straight_line():
    seg = BallSegment(Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(3, 0))
    for t in (0.0, 0.25, 0.5, 0.9, 1.0):
        assert curvature(seg, t) == 0.0


def test_curvature_example_segment():
    assert abs(curvature(EXAMPLE, 0.0) - 4.0) <= 1e-12
    assert abs(curvature(EXAMPLE, 1.0) - 4.0) <= 1e-12


def test_curvature_cusp_raises_singular_point():
    seg = BallSegment(Point2(0, 0), Point2(0, 0), Point2(1, 0), Point2(1, 1))
    with pytest.raises(SingularPoint):
        curvature(seg, 0.0)


# --- G2 synthesis -----------------------------------------------------------

def test_control_points_from_g2_quadrant():
    data = G2EndData(Point2(0, 0), Point2(1, 1), UnitVec2(1, 0), UnitVec2(0, 1), 4.0, 4.0)
    seg = control_points_from_g2(data, SegmentParams(2.0, 2.0))
    assert seg.p0 == Point2(0, 0)
    assert seg.p1 == Point2(0.5, 0)
    assert seg.p2 == Point2(1, 0.5)
    assert seg.p3 == Point2(1, 1)


def test_control_points_unit_step():
    data = G2EndData(Point2(0, 0), Point2(3, 0), UnitVec2(1, 0), UnitVec2(1, 0), 0.0, 0.0)
    seg = control_points_from_g2(data, SegmentParams(1.0, 1.0))
    assert seg.p1 == Point2(1.0, 0.0)


def test_nonpositive_params_rejected():
    with pytest.raises(InvalidParams):
        SegmentParams(-1.0, 2.0)
    with pytest.raises(InvalidParams):
        SegmentParams(2.0, 0.0)


def test_kappa_closed_forms_quadrant():
    data = G2EndData(Point2(0, 0), Point2(1, 1), UnitVec2(1, 0), UnitVec2(0, 1), 4.0, 4.0)
    params = SegmentParams(2.0, 2.0)
    assert abs(kappa_start(data, params) - 4.0) <= 1e-12
    assert abs(kappa_end(data, params) - 4.0) <= 1e-12


def test_kappa_closed_forms_straight_chord():
    data = G2EndData(Point2(0, 0), Point2(1, 0), UnitVec2(1, 0), UnitVec2(1, 0), 0.0, 0.0)
    for al, be in [(0.5, 0.5), (1.0, 3.0), (7.0, 0.2)]:
        params = SegmentParams(al, be)
        assert kappa_start(data, params) == 0.0
        assert kappa_end(data, params) == 0.0


def test_kappa_closed_forms_vase_middle(vase_middle_data):
    params = SegmentParams(math.sqrt(2.0) / 3.0, 1.0 / math.sqrt(3.0))
    assert abs(kappa_start(vase_middle_data, params) - 1.0) <= 1e-12
    assert abs(kappa_end(vase_middle_data, params) - (-1.5)) <= 1e-12


def test_closed_form_matches_numeric_curvature():
    rng = np.random.default_rng(6)
    for _ in range(1000):
        s = rng.uniform(-5, 5, 2)
        e = rng.uniform(-5, 5, 2)
        if math.hypot(e[0] - s[0], e[1] - s[1]) <= 1e-3:
            continue
        th = rng.uniform(0, 2 * math.pi, 2)
        data = G2EndData(
            Point2(*s), Point2(*e),
            UnitVec2(math.cos(th[0]), math.sin(th[0])),
            UnitVec2(math.cos(th[1]), math.sin(th[1])),
            0.0, 0.0,
        )
        params = SegmentParams(*np.exp(rng.uniform(np.log(0.05), np.log(20.0), 2)))
        seg = control_points_from_g2(data, params)
        k0_closed = kappa_start(data, params)
        k1_closed = kappa_end(data, params)
        k0_num = curvature(seg, 0.0)
        k1_num = curvature(seg, 1.0)
        assert abs(k0_closed - k0_num) <= 1e-8 * (1.0 + abs(k0_num))
        assert abs(k1_closed - k1_num) <= 1e-8 * (1.0 + abs(k1_num))


def test_tangent_matching_and_end_speeds():
    rng = np.random.default_rng(7)
    for _ in range(200):
        s = rng.uniform(-5, 5, 2)
        e = rng.uniform(-5, 5, 2)
        if math.hypot(e[0] - s[0], e[1] - s[1]) <= 1e-3:
            continue
        th = rng.uniform(0, 2 * math.pi, 2)
        t_start = UnitVec2(math.cos(th[0]), math.sin(th[0]))
        t_end = UnitVec2(math.cos(th[1]), math.sin(th[1]))
        data = G2EndData(Point2(*s), Point2(*e), t_start, t_end, 0.0, 0.0)
        al, be = np.exp(rng.uniform(np.log(0.05), np.log(20.0), 2))
        seg = control_points_from_g2(data, SegmentParams(al, be))
        u0 = normalize(deriv1(seg, 0.0))
        u1 = normalize(deriv1(seg, 1.0))
        assert math.hypot(u0.m - t_start.m, u0.n - t_start.n) <= 1e-12
        assert math.hypot(u1.m - t_end.m, u1.n - t_end.n) <= 1e-12
        assert abs(deriv1(seg, 0.0).norm() - 2.0 / al) <= 1e-12 * (2.0 / al)
        assert abs(deriv1(seg, 1.0).norm() - 2.0 / be) <= 1e-12 * (2.0 / be)


# --- signed radius ----------------------------------------------------------

def test_curvature_from_signed_radius():
    assert curvature_from_signed_radius(SignedRadius(1, 0.5)) == 2.0
    assert curvature_from_signed_radius(SignedRadius(-1, 2.0)) == -0.5
    assert curvature_from_signed_radius(SignedRadius(1, 1.0 / 3.0)) == pytest.approx(3.0, rel=1e-15)


def test_signed_radius_validation():
    with pytest.raises(InvalidRadius):
        SignedRadius(1, 0.0)
    with pytest.raises(InvalidRadius):
        SignedRadius(1, -2.0)
    with pytest.raises(InvalidRadius):
        SignedRadius(0, 1.0)


# --- Bernstein conversion ---------------------------------------------------

def test_to_bernstein_degenerate_handles():
    seg = BallSegment(Point2(0, 0), Point2(0, 0), Point2(1, 1), Point2(1, 1))
    b0, b1, b2, b3 = to_bernstein(seg)
    assert b1 == seg.p0
    assert b2 == seg.p3


def test_to_bernstein_example():
    b0, b1, b2, b3 = to_bernstein(EXAMPLE)
    assert (b1.x, b1.y) == pytest.approx((1.0 / 3.0, 0.0), abs=1e-15)
    assert (b2.x, b2.y) == pytest.approx((1.0, 2.0 / 3.0), abs=1e-15)
    for t in np.linspace(0, 1, 100):
        bp = bernstein_point((b0, b1, b2, b3), t)
        p = evaluate(EXAMPLE, t)
        assert math.hypot(bp[0] - p.x, bp[1] - p.y) <= 1e-12


def test_to_bernstein_roundtrip_random():
    rng = np.random.default_rng(8)
    ts = np.linspace(0.0, 1.0, 101)
    for _ in range(100):
        seg = random_segment(rng)
        bz = to_bernstein(seg)
        for t in ts:
            bp = bernstein_point(bz, t)
            p = evaluate(seg, t)
            assert math.hypot(bp[0] - p.x, bp[1] - p.y) <= 1e-12 * max(1.0, abs(p.x), abs(p.y))


# --- basis properties -------------------------------------------------------

@given(t=st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_partition_of_unity(t):
    assert abs(sum(ball_basis(t)) - 1.0) <= 1e-12


@given(t=st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_basis_nonnegative_on_domain(t):
    assert all(w >= 0.0 for w in ball_basis(t))


def test_symmetry_of_reversed_segment():
    rng = np.random.default_rng(9)
    for _ in range(100):
        seg = random_segment(rng)
        rev = reverse(seg)
        for t in rng.uniform(0, 1, 20):
            a = evaluate(rev, t)
            b = evaluate(seg, 1.0 - t)
            assert math.hypot(a.x - b.x, a.y - b.y) <= 1e-12 * max(1.0, abs(b.x), abs(b.y))


def test_affine_invariance():
    rng = np.random.default_rng(10)
    for _ in range(100):
        seg = random_segment(rng)
        mat = Affine2(*rng.uniform(-2, 2, 6))
        mapped = BallSegment(*(apply_affine(mat, p) for p in (seg.p0, seg.p1, seg.p2, seg.p3)))
        for t in rng.uniform(0, 1, 10):
            a = evaluate(mapped, t)
            b = apply_affine(mat, evaluate(seg, t))
            assert math.hypot(a.x - b.x, a.y - b.y) <= 1e-9


def test_convex_hull_property():
    rng = np.random.default_rng(11)
    ts = np.linspace(0.0, 1.0, 100)
    for _ in range(1000):
        seg = random_segment(rng)
        hull_pts = seg_points(seg)
        for t in ts:
            p = evaluate(seg, t)
            assert point_in_hull((p.x, p.y), hull_pts, 1e-9)


def test_variation_diminishing_sampled():
    rng = np.random.default_rng(12)
    ts = np.linspace(0.0, 1.0, 512)
    for _ in range(200):
        seg = random_segment(rng)
        curve = [evaluate(seg, t) for t in ts]
        poly = seg_points(seg)
        for _ in range(20):
            theta = rng.uniform(0, 2 * math.pi)
            c = rng.uniform(-10, 10)
            nx, ny = math.cos(theta), math.sin(theta)
            f_curve = [nx * p.x + ny * p.y + c for p in curve]
            f_poly = [nx * x + ny * y + c for x, y in poly]
            assert sign_changes(f_curve) <= sign_changes(f_poly)
