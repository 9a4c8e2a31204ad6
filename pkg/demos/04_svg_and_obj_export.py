"""Export the vase: an SVG with the curvature comb, and an OBJ solid of
revolution around the y-axis.

Both writers are byte-deterministic (fixed 9-significant-digit decimals),
so exports diff cleanly under version control.
"""

import math
from pathlib import Path

from ballkurve import (
    G2SplineSpec,
    KnotSpec,
    Point2,
    RevolveConfig,
    UnitVec2,
    build_spline,
    revolve_obj,
    to_svg,
)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

diag = math.sqrt(2.0) / 2.0
spec = G2SplineSpec(
    knots=(
        KnotSpec(Point2(1.0, 0.0), UnitVec2(1.0, 0.0), 3.0),
        KnotSpec(Point2(3.5, 5.0), UnitVec2(0.0, 1.0), 1.0),
        KnotSpec(Point2(0.5, 9.0), UnitVec2(0.0, 1.0), -1.5),
        KnotSpec(Point2(2.0, 12.0), UnitVec2(diag, diag), -1.0),
    )
)
spline = build_spline(spec)

plain = to_svg(spline)
combed = to_svg(spline, comb=True, comb_scale=0.6, comb_density=24)
(OUT / "vase.svg").write_text(plain, encoding="utf-8")
(OUT / "vase_comb.svg").write_text(combed, encoding="utf-8")
print(f"wrote {OUT / 'vase.svg'} ({len(plain)} bytes, exact cubic paths)")
print(f"wrote {OUT / 'vase_comb.svg'} ({len(combed)} bytes, comb shows signed curvature)")

cfg = RevolveConfig(angular_steps=64, samples_per_segment=10)
obj = revolve_obj(spline, cfg)
(OUT / "vase.obj").write_text(obj, encoding="utf-8")
n_v = sum(1 for line in obj.splitlines() if line.startswith("v "))
n_f = sum(1 for line in obj.splitlines() if line.startswith("f "))
print(f"wrote {OUT / 'vase.obj'} ({n_v} vertices, {n_f} quad faces)")
print("profile samples x angular steps =", 28, "x", cfg.angular_steps)
