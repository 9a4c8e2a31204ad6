"""Stateless HTTP JSON service over the solve/sample/export pipeline.

Endpoints:
    GET  /health          -> 200 "ok"
    POST /solve           body: spec JSON            -> solve response JSON
    POST /sample          body: {"spec": ..., "n": int} -> polyline JSON
    POST /render/svg      body: {"spec": ..., "comb"?, "comb_scale"?, "comb_density"?} -> SVG
    POST /render/obj      body: {"spec": ..., "steps"?, "samples"?} -> OBJ text

Errors are {"error": {"code", "message", "segment"?}} with status 400 for
malformed requests and 422 for well-formed but infeasible geometry. Every
handler is a pure function of the request body.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import InfeasibleSegment, InvalidSpec, NoFeasiblePair, ProfileCrossesAxis
from .export import RevolveConfig, revolve_obj, sample, to_svg
from .jsonio import (
    error_payload,
    sample_response,
    solve_to_response,
    spec_from_dict,
)
from .solver import DEFAULT_CONFIG


class _BadRequest(Exception):
    pass


def _require_int(body: dict, key: str, minimum: int, default: int | None = None) -> int:
    if key not in body:
        if default is None:
            raise _BadRequest(f"missing required field '{key}'")
        return default
    value = body[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise _BadRequest(f"field '{key}' must be an integer")
    if value < minimum:
        raise _BadRequest(f"field '{key}' must be >= {minimum}")
    return value


def handle_solve(body: dict) -> tuple[int, str, bytes]:
    spec = spec_from_dict(body)
    _spline, response = solve_to_response(spec, DEFAULT_CONFIG)
    return 200, "application/json", _json_bytes(response)


def handle_sample(body: dict) -> tuple[int, str, bytes]:
    if not isinstance(body, dict) or "spec" not in body:
        raise _BadRequest("body must be an object with 'spec' and 'n'")
    spec = spec_from_dict(body["spec"])
    n = _require_int(body, "n", 2)
    spline, _response = solve_to_response(spec, DEFAULT_CONFIG)
    return 200, "application/json", _json_bytes(sample_response(sample(spline, n)))


def handle_render_svg(body: dict) -> tuple[int, str, bytes]:
    if not isinstance(body, dict) or "spec" not in body:
        raise _BadRequest("body must be an object with 'spec'")
    spec = spec_from_dict(body["spec"])
    comb = bool(body.get("comb", False))
    comb_scale = float(body.get("comb_scale", 1.0))
    comb_density = _require_int(body, "comb_density", 2, default=10)
    spline, _response = solve_to_response(spec, DEFAULT_CONFIG)
    svg = to_svg(spline, comb=comb, comb_scale=comb_scale, comb_density=comb_density)
    return 200, "image/svg+xml", svg.encode("utf-8")


def handle_render_obj(body: dict) -> tuple[int, str, bytes]:
    if not isinstance(body, dict) or "spec" not in body:
        raise _BadRequest("body must be an object with 'spec'")
    spec = spec_from_dict(body["spec"])
    cfg = RevolveConfig(
        angular_steps=_require_int(body, "steps", 3, default=64),
        samples_per_segment=_require_int(body, "samples", 2, default=10),
    )
    spline, _response = solve_to_response(spec, DEFAULT_CONFIG)
    return 200, "text/plain", revolve_obj(spline, cfg).encode("utf-8")


_POST_ROUTES = {
    "/solve": handle_solve,
    "/sample": handle_sample,
    "/render/svg": handle_render_svg,
    "/render/obj": handle_render_obj,
}


def _json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


class KernelRequestHandler(BaseHTTPRequestHandler):
    server_version = "ballkurve/0.1"

    def log_message(self, format: str, *args) -> None:  # noqa: A002 - stdlib signature
        pass  # keep test output clean; the service is stateless anyway

    def _reply(self, status: int, content_type: str, payload: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", f"{content_type}; charset=utf-8")
        self.send_header("Content-Length", str(len(payload)))
        # the browser designer is served from a different origin
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def do_OPTIONS(self) -> None:  # noqa: N802 - stdlib naming
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def _reply_error(self, status: int, code: str, message: str, segment: int | None = None) -> None:
        self._reply(status, "application/json", _json_bytes(error_payload(code, message, segment)))

    def do_GET(self) -> None:  # noqa: N802 - stdlib naming
        if self.path == "/health":
            self._reply(200, "text/plain", b"ok")
        else:
            self._reply_error(404, "not_found", f"unknown path {self.path}")

    def do_POST(self) -> None:  # noqa: N802 - stdlib naming
        handler = _POST_ROUTES.get(self.path)
        if handler is None:
            self._reply_error(404, "not_found", f"unknown path {self.path}")
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            body = json.loads(raw.decode("utf-8"))
        except (ValueError, UnicodeDecodeError) as exc:
            self._reply_error(400, "bad_json", f"request body is not valid JSON: {exc}")
            return
        try:
            status, content_type, payload = handler(body)
        except _BadRequest as exc:
            self._reply_error(400, "bad_request", str(exc))
        except InvalidSpec as exc:
            self._reply_error(400, "invalid_spec", str(exc))
        except InfeasibleSegment as exc:
            self._reply_error(422, "infeasible", str(exc), segment=exc.segment_index)
        except NoFeasiblePair as exc:
            self._reply_error(422, "infeasible", str(exc))
        except ProfileCrossesAxis as exc:
            self._reply_error(422, "profile_crosses_axis", str(exc))
        except ValueError as exc:
            self._reply_error(400, "bad_request", str(exc))
        else:
            self._reply(status, content_type, payload)


def make_server(port: int) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), KernelRequestHandler)


def serve_forever(port: int) -> None:
    with make_server(port) as httpd:
        httpd.serve_forever()
