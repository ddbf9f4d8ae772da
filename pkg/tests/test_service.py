import json
import threading
import urllib.error
import urllib.request

import pytest

from planeconfig import build_class_report, canonical_json, cremona
from planeconfig.atlas import builtin_seeds, seed_by_name
from planeconfig.fileio import config_document
from planeconfig.service import make_server

HEPT = seed_by_name("HEPT7").configuration


@pytest.fixture(scope="module")
def base_url():
    httpd = make_server(port=0)  # ephemeral port
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield "http://127.0.0.1:%d" % httpd.server_address[1]
    httpd.shutdown()
    httpd.server_close()


def request(base_url, path, doc=None, method=None, raw=None):
    url = base_url + path
    data = raw
    if doc is not None:
        data = json.dumps(doc).encode("utf-8")
    req = urllib.request.Request(url, data=data, method=method)
    if data is not None:
        req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, resp.read().decode("utf-8"), dict(resp.headers)
    except urllib.error.HTTPError as err:
        return err.code, err.read().decode("utf-8"), dict(err.headers)


def test_seeds_endpoint(base_url):
    status, body, headers = request(base_url, "/seeds")
    assert status == 200
    assert headers["Access-Control-Allow-Origin"] == "*"
    doc = json.loads(body)
    assert len(doc["seeds"]) == len(builtin_seeds())
    byname = {s["name"]: s for s in doc["seeds"]}
    assert byname["HEPT7"]["class_name"] == "(7,0,0,0)"
    assert all(isinstance(v, str) for row in byname["HEX6"]["points"] for v in row)


def test_classify_matches_cli_bytes(base_url):
    status, body, _ = request(base_url, "/classify", doc=config_document(HEPT))
    assert status == 200
    assert body == canonical_json(build_class_report(HEPT))


def test_classify_with_labels(base_url):
    doc = config_document(seed_by_name("HEX6").configuration, labels=list("abcdef"))
    status, body, _ = request(base_url, "/classify", doc=doc)
    assert status == 200
    assert json.loads(body)["labels"] == list("abcdef")


def test_classify_degenerate_still_200(base_url):
    doc = {"points": [[0, 0, 1], [1, 0, 1], [2, 0, 1], [0, 1, 1], [1, 2, 1]]}
    status, body, _ = request(base_url, "/classify", doc=doc)
    assert status == 200
    rep = json.loads(body)
    assert rep["typicality"]["typical"] is False
    assert rep["typicality"]["collinear_triples"] == [[0, 1, 2]]


def test_classify_malformed_schema_400(base_url):
    status, body, _ = request(base_url, "/classify", doc={"nope": []})
    assert status == 400
    assert json.loads(body)["error"]["kind"] == "ParseError"


def test_classify_unparseable_body_400(base_url):
    status, body, _ = request(base_url, "/classify", raw=b"{{{", method="POST")
    assert status == 400
    assert json.loads(body)["error"]["kind"] == "ParseError"


def test_path_planted_wall(base_url):
    frame = [[0, 0, 1], [10, 0, 1], [0, 10, 1], [9, 8, 1]]
    doc = {
        "start": {"points": frame + [[5, 1, 1]]},
        "end": {"points": frame + [[5, -1, 1]]},
    }
    status, body, _ = request(base_url, "/path", doc=doc)
    assert status == 200
    out = json.loads(body)
    assert out["certified"] is False
    assert [e["kind"] for e in out["events"]] == ["collinear"]
    assert out["events"][0]["labels"] == [0, 1, 4]
    lo, hi = out["events"][0]["interval"]
    assert eval_fraction(lo) < 0.5 < eval_fraction(hi)


def eval_fraction(s: str) -> float:
    from fractions import Fraction

    return float(Fraction(s))


def test_path_certified(base_url):
    frame = [[0, 0, 1], [10, 0, 1], [0, 10, 1], [9, 8, 1]]
    doc = {
        "start": {"points": frame + [[5, 2, 1]]},
        "end": {"points": frame + [[5, 1, 1]]},
    }
    status, body, _ = request(base_url, "/path", doc=doc)
    assert status == 200
    assert json.loads(body) == {"certified": True, "events": []}


def test_path_non_typical_endpoint_422(base_url):
    bad = {"points": [[0, 0, 1], [1, 0, 1], [2, 0, 1], [0, 1, 1], [1, 2, 1]]}
    good = {"points": [[0, 0, 1], [1, 0, 1], [2, 1, 1], [0, 1, 1], [1, 2, 1]]}
    status, body, _ = request(base_url, "/path", doc={"start": bad, "end": good})
    assert status == 422
    assert json.loads(body)["error"]["kind"] == "NotTypical"


def test_path_missing_keys_400(base_url):
    status, body, _ = request(base_url, "/path", doc={"start": {}})
    assert status == 400


def test_cremona_endpoint(base_url):
    doc = config_document(HEPT)
    doc["base"] = [0, 1, 2]
    status, body, _ = request(base_url, "/cremona", doc=doc)
    assert status == 200
    out = json.loads(body)
    image = cremona(HEPT, (0, 1, 2))
    assert out["points"] == config_document(image)["points"]
    assert out["class_name"]


def test_cremona_bad_base_400(base_url):
    doc = config_document(HEPT)
    doc["base"] = [0, 1]
    status, body, _ = request(base_url, "/cremona", doc=doc)
    assert status == 400
    doc["base"] = [0, 1, True]
    status, _, _ = request(base_url, "/cremona", doc=doc)
    assert status == 400


def test_cremona_wrong_size_422(base_url):
    doc = config_document(seed_by_name("HEX6").configuration)
    doc["base"] = [0, 1, 2]
    status, body, _ = request(base_url, "/cremona", doc=doc)
    assert status == 422
    assert json.loads(body)["error"]["kind"] == "InvalidSize"


def test_unknown_routes_404(base_url):
    status, _, _ = request(base_url, "/nope")
    assert status == 404
    status, _, _ = request(base_url, "/nope", doc={})
    assert status == 404


def test_options_preflight(base_url):
    status, _, headers = request(base_url, "/classify", method="OPTIONS")
    assert status == 204
    assert headers["Access-Control-Allow-Methods"] == "GET, POST, OPTIONS"


def test_oversized_body_400(base_url):
    blob = b'{"points": "' + b"x" * (1 << 20) + b'"}'
    status, body, _ = request(base_url, "/classify", raw=blob, method="POST")
    assert status == 400
