"""A tour of one Ball cubic segment: evaluation, derivatives, curvature.

The segment basis is {(1-t)^2, 2t(1-t)^2, 2t^2(1-t), t^2}. Because the four
weights are nonnegative and sum to one on [0, 1], the curve interpolates its
end control points and stays inside the control polygon's convex hull.
"""

import numpy as np

from ballkurve import (
    BallSegment,
    Point2,
    ball_basis,
    curvature,
    deriv1,
    evaluate,
    to_bernstein,
)

seg = BallSegment(Point2(0, 0), Point2(0.5, 0), Point2(1, 0.5), Point2(1, 1))

print("basis weights along the segment:")
for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    w = ball_basis(t)
    print(f"  t={t:4.2f}  weights={tuple(round(v, 4) for v in w)}  sum={sum(w):.15f}")

print("\nendpoints are interpolated exactly:")
print("  B(0) =", evaluate(seg, 0.0), " (control point p0)")
print("  B(1) =", evaluate(seg, 1.0), " (control point p3)")

print("\nend derivatives point along the control handles:")
print("  B'(0) =", deriv1(seg, 0.0), " = 2 (p1 - p0)")
print("  B'(1) =", deriv1(seg, 1.0), " = 2 (p3 - p2)")

print("\nsigned curvature (positive turns left):")
for t in np.linspace(0.0, 1.0, 5):
    print(f"  kappa({t:4.2f}) = {curvature(seg, float(t)):+.6f}")

print("\nthe same cubic in the Bernstein basis (for SVG export):")
for label, p in zip("b0 b1 b2 b3".split(), to_bernstein(seg)):
    print(f"  {label} = ({p.x:.6f}, {p.y:.6f})")
