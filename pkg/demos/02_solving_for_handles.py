"""How the kernel finds the handle lengths (alpha, beta) for prescribed
end points, unit tangents, and signed end curvatures.

The two endpoint-curvature equations reduce to a quartic in alpha once beta
is eliminated; every real positive root is verified against both original
equations, and degenerate configurations (parallel tangents, zero curvature
targets, collinear data) use exact closed forms instead.
"""

import math

from ballkurve import (
    G2EndData,
    NoFeasiblePair,
    Point2,
    UnitVec2,
    build_quartic,
    coefficients,
    real_roots,
    select_default,
    solve_pairs,
)

# A quarter-turn: from (0,0) heading right, to (1,1) heading up, with
# curvature 4 at both ends.
quarter = G2EndData(
    start=Point2(0, 0),
    end=Point2(1, 1),
    t_start=UnitVec2(1, 0),
    t_end=UnitVec2(0, 1),
    kappa_start=4.0,
    kappa_end=4.0,
)
co = coefficients(quarter)
print("system coefficients:", co)
quartic = build_quartic(co, quarter.kappa_start, quarter.kappa_end)
print("reduced quartic:", quartic.coeffs())
print("its real roots:", real_roots(quartic))
for pair in solve_pairs(quarter):
    print(f"feasible pair: alpha={pair.alpha:.9f} beta={pair.beta:.9f} "
          f"residuals=({pair.residual0:.2e}, {pair.residual1:.2e})")

# A segment with three feasible pairs; the default picks end speeds closest
# to the chord length, and a designer may override per segment.
crowded = G2EndData(
    start=Point2(0, 0),
    end=Point2(1, 0),
    t_start=UnitVec2(math.sqrt(0.5), -math.sqrt(0.5)),
    t_end=UnitVec2(0.5, math.sqrt(3) / 2),
    kappa_start=0.5,
    kappa_end=1.0,
)
candidates = solve_pairs(crowded)
print(f"\na crowded segment has {len(candidates)} candidates:")
for i, pair in enumerate(candidates):
    print(f"  [{i}] alpha={pair.alpha:.6f} beta={pair.beta:.6f}")
default = select_default(candidates, crowded.chord())
print("default choice:", f"alpha={default.alpha:.6f} beta={default.beta:.6f}")

# And a target set no single Ball cubic can meet.
impossible = G2EndData(
    start=Point2(0, 0),
    end=Point2(1, 0),
    t_start=UnitVec2(0, 1),
    t_end=UnitVec2(0, -1),
    kappa_start=2.0,
    kappa_end=2.0,
)
try:
    solve_pairs(impossible)
except NoFeasiblePair as err:
    print("\ninfeasible data is reported, not fudged:")
    print(" ", err)
