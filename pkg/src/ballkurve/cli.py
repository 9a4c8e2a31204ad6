"""Command-line front end: solve | render | revolve | check | serve.

Exit codes: 0 success, 1 malformed input or I/O or configuration error,
2 infeasible geometry. Standard output is valid JSON whenever the exit code
is 0 or 2 (render/revolve print a small status object; errors print an
error payload).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import InfeasibleSegment, InvalidSpec, NoFeasiblePair, ProfileCrossesAxis
from .export import RevolveConfig, revolve_obj, to_svg
from .jsonio import (
    config_from_options,
    error_payload,
    load_spec,
    report_to_dict,
    solve_to_response,
)
from .spline import verify_g2

DEFAULT_PORT = 8787


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _add_solver_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol-residual", type=float, default=None, help="residual tolerance (relative to 1+|kappa|)")
    p.add_argument("--alpha-max", type=float, default=None, help="upper bound for alpha and beta")


def _build(args: argparse.Namespace):
    spec = load_spec(args.spec)
    config = config_from_options(args.tol_residual, args.alpha_max)
    return solve_to_response(spec, config)


def cmd_solve(args: argparse.Namespace) -> int:
    _spline, response = _build(args)
    _emit(response)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    spline, _response = _build(args)
    svg = to_svg(spline, comb=args.comb, comb_scale=args.comb_scale, comb_density=args.samples)
    Path(args.svg).write_text(svg, encoding="utf-8")
    _emit({"written": args.svg, "segments": len(spline.segments), "comb": args.comb})
    return 0


def cmd_revolve(args: argparse.Namespace) -> int:
    spline, _response = _build(args)
    cfg = RevolveConfig(angular_steps=args.steps, samples_per_segment=args.samples)
    obj = revolve_obj(spline, cfg)
    Path(args.obj).write_text(obj, encoding="utf-8")
    n_vertices = sum(1 for line in obj.splitlines() if line.startswith("v "))
    _emit({"written": args.obj, "vertices": n_vertices, "steps": args.steps})
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    spline, _response = _build(args)
    report = verify_g2(spline)
    _emit(report_to_dict(report))
    return 0 if report.passed else 2


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve_forever

    serve_forever(args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="ballkurve", description="G2 Ball cubic spline kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a spec and print candidates/report as JSON")
    p_solve.add_argument("spec", help="path to a spline spec JSON file")
    _add_solver_options(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_render = sub.add_parser("render", help="solve and write an SVG document")
    p_render.add_argument("spec")
    p_render.add_argument("--svg", required=True, help="output SVG path")
    p_render.add_argument("--comb", action="store_true", help="draw the curvature comb")
    p_render.add_argument("--comb-scale", type=float, default=1.0)
    p_render.add_argument("--samples", type=int, default=10, help="comb lines per segment")
    _add_solver_options(p_render)
    p_render.set_defaults(func=cmd_render)

    p_revolve = sub.add_parser("revolve", help="solve and write an OBJ surface of revolution")
    p_revolve.add_argument("spec")
    p_revolve.add_argument("--obj", required=True, help="output OBJ path")
    p_revolve.add_argument("--steps", type=int, default=64, help="angular steps around the y-axis")
    p_revolve.add_argument("--samples", type=int, default=10, help="profile samples per segment")
    _add_solver_options(p_revolve)
    p_revolve.set_defaults(func=cmd_revolve)

    p_check = sub.add_parser("check", help="solve and report G2 joint gaps")
    p_check.add_argument("spec")
    _add_solver_options(p_check)
    p_check.set_defaults(func=cmd_check)

    p_serve = sub.add_parser("serve", help="run the HTTP JSON service")
    p_serve.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("BALLKURVE_PORT", DEFAULT_PORT)),
    )
    p_serve.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleSegment as exc:
        _emit(error_payload("infeasible", str(exc), segment=exc.segment_index))
        return 2
    except NoFeasiblePair as exc:
        _emit(error_payload("infeasible", str(exc)))
        return 2
    except ProfileCrossesAxis as exc:
        _emit(error_payload("profile_crosses_axis", str(exc)))
        return 2
    except InvalidSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
