import json
import threading
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor

import pytest

from ballkurve import build_spline, to_svg
from ballkurve.service import make_server
from conftest import FIXTURES


@pytest.fixture(scope="module")
def server_url():
    httpd = make_server(0)
    port = httpd.server_address[1]
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    httpd.shutdown()
    thread.join(timeout=5)


def post(url, path, body, raw: bytes | None = None):
    data = raw if raw is not None else json.dumps(body).encode("utf-8")
    req = urllib.request.Request(url + path, data=data, headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req, timeout=30) as resp:
            return resp.status, resp.headers.get("Content-Type", ""), resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.headers.get("Content-Type", ""), err.read()


def vase_doc():
    return json.loads((FIXTURES / "vase.json").read_text())


def test_health(server_url):
    with urllib.request.urlopen(server_url + "/health", timeout=10) as resp:
        assert resp.status == 200
        assert resp.read() == b"ok"


def test_solve_endpoint(server_url):
    status, ctype, body = post(server_url, "/solve", vase_doc())
    assert status == 200
    assert ctype.startswith("application/json")
    doc = json.loads(body)
    assert len(doc["segments"]) == 3
    assert doc["report"]["pass"] is True


def test_solve_stateless_identical_responses(server_url):
    first = post(server_url, "/solve", vase_doc())
    second = post(server_url, "/solve", vase_doc())
    assert first == second


def test_solve_invalid_json_is_400(server_url):
    status, _ctype, body = post(server_url, "/solve", None, raw=b"{nope")
    assert status == 400
    assert json.loads(body)["error"]["code"] == "bad_json"


def test_solve_schema_violation_is_400(server_url):
    status, _ctype, body = post(server_url, "/solve", {"knots": []})
    assert status == 400
    assert json.loads(body)["error"]["code"] == "invalid_spec"


def test_solve_infeasible_is_422_with_segment(server_url):
    doc = json.loads((FIXTURES / "infeasible.json").read_text())
    status, _ctype, body = post(server_url, "/solve", doc)
    assert status == 422
    err = json.loads(body)["error"]
    assert err["code"] == "infeasible"
    assert err["segment"] == 1


def test_sample_endpoint(server_url):
    status, _ctype, body = post(server_url, "/sample", {"spec": vase_doc(), "n": 10})
    assert status == 200
    doc = json.loads(body)
    assert len(doc["points"]) == 28
    assert len(doc["tangents"]) == 28


def test_sample_missing_n_is_400(server_url):
    status, _ctype, body = post(server_url, "/sample", {"spec": vase_doc()})
    assert status == 400
    assert json.loads(body)["error"]["code"] == "bad_request"


def test_render_svg_matches_library_output(server_url, vase_spec):
    status, ctype, body = post(server_url, "/render/svg", {"spec": vase_doc()})
    assert status == 200
    assert ctype.startswith("image/svg+xml")
    assert body.decode("utf-8") == to_svg(build_spline(vase_spec))


def test_render_svg_infeasible_is_422(server_url):
    doc = json.loads((FIXTURES / "infeasible.json").read_text())
    status, _ctype, _body = post(server_url, "/render/svg", {"spec": doc})
    assert status == 422


def test_render_obj_endpoint(server_url):
    status, ctype, body = post(server_url, "/render/obj", {"spec": vase_doc(), "steps": 64, "samples": 10})
    assert status == 200
    assert ctype.startswith("text/plain")
    lines = body.decode("utf-8").splitlines()
    assert sum(1 for l in lines if l.startswith("v ")) == 1792


def test_render_obj_bad_steps_is_400(server_url):
    status, _ctype, _body = post(server_url, "/render/obj", {"spec": vase_doc(), "steps": 2})
    assert status == 400


def test_render_obj_profile_crossing_axis_is_422(server_url):
    doc = json.loads((FIXTURES / "negative_profile.json").read_text())
    status, _ctype, body = post(server_url, "/render/obj", {"spec": doc})
    assert status == 422
    assert json.loads(body)["error"]["code"] == "profile_crosses_axis"


def test_unknown_paths_are_404(server_url):
    status, _ctype, _body = post(server_url, "/nope", {})
    assert status == 404
    req = urllib.request.Request(server_url + "/nope")
    with pytest.raises(urllib.error.HTTPError) as exc_info:
        urllib.request.urlopen(req, timeout=10)
    assert exc_info.value.code == 404


def test_concurrent_requests_consistent(server_url):
    doc = vase_doc()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _i: post(server_url, "/solve", doc), range(16)))
    assert all(r == results[0] for r in results)
    assert results[0][0] == 200
