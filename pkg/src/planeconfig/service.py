"""Local JSON service for scripts and the browser explorer.

Stateless: every request body is parsed, classified, answered, forgotten.
Binds localhost only; this is a desk calculator, not a deployment target.
CORS headers are open so a UI served from another local port can call in.

  POST /classify  {"points": [...], "labels"?}      -> class report
  POST /path      {"start": {...}, "end": {...}}    -> certificate + events
  POST /cremona   {"points": [...], "base": [i,j,k]} -> image configuration
  GET  /seeds                                       -> stored seed library

Errors come back as {"error": {"kind": ..., "detail": ...}}.  A classify
call answers 200 even for degenerate input: its report carries the
typicality verdict and the violating tuples, mirroring the CLI output.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .atlas import builtin_seeds
from .classifier import q_class
from .cremona import cremona
from .deform import LinearPath, wall_events
from .errors import ParseError, PlaneConfigError
from .fileio import config_document, parse_config
from .report import build_class_report, canonical_json

MAX_BODY = 1 << 20


def _classify(doc: dict) -> str:
    cf = parse_config(json.dumps(doc))
    return canonical_json(build_class_report(cf.configuration, cf.labels))


def _path(doc: dict) -> str:
    if not isinstance(doc, dict) or "start" not in doc or "end" not in doc:
        raise ParseError('expected {"start": {...}, "end": {...}}')
    a = parse_config(json.dumps(doc["start"])).configuration
    b = parse_config(json.dumps(doc["end"])).configuration
    events = wall_events(LinearPath(a, b))
    return canonical_json({
        "certified": not events,
        "events": [
            {"kind": e.kind, "labels": list(e.labels),
             "interval": [str(e.interval[0]), str(e.interval[1])],
             "clustered": e.clustered}
            for e in events
        ],
    })


def _cremona(doc: dict) -> str:
    if not isinstance(doc, dict) or "base" not in doc:
        raise ParseError('expected {"points": [...], "base": [i, j, k]}')
    base = doc["base"]
    if (not isinstance(base, list) or len(base) != 3
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in base)):
        raise ParseError('"base" must be three integer labels')
    cf = parse_config(json.dumps({"points": doc.get("points")}))
    image = cremona(cf.configuration, tuple(base))
    out = config_document(image)
    out["class_name"] = q_class(image).name
    return canonical_json(out)


def _seeds() -> str:
    return canonical_json({
        "seeds": [
            {
                "name": s.name,
                "class_name": s.class_name,
                "fingerprint": s.fingerprint,
                "provenance": s.provenance,
                "points": [[str(v) for v in t] for t in s.points],
            }
            for s in builtin_seeds()
        ]
    })


class Handler(BaseHTTPRequestHandler):
    server_version = "planeconfig"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: str):
        body = payload.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _fail(self, status: int, exc: Exception):
        err = {"kind": type(exc).__name__, "detail": str(exc)}
        self._send(status, canonical_json({"error": err}))

    def do_OPTIONS(self):
        self._send(204, "")

    def do_GET(self):
        if self.path.rstrip("/") == "/seeds":
            self._send(200, _seeds())
        else:
            self._send(404, canonical_json(
                {"error": {"kind": "NotFound", "detail": self.path}}))

    def do_POST(self):
        handlers = {"/classify": _classify, "/path": _path, "/cremona": _cremona}
        fn = handlers.get(self.path.rstrip("/"))
        if fn is None:
            self._send(404, canonical_json(
                {"error": {"kind": "NotFound", "detail": self.path}}))
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            self._fail(400, ParseError("bad Content-Length header"))
            return
        if length > MAX_BODY:
            # drain so the client gets the reply instead of a reset
            while length > 0:
                chunk = self.rfile.read(min(length, 1 << 16))
                if not chunk:
                    break
                length -= len(chunk)
            self._fail(400, ParseError("request body too large"))
            return
        try:
            doc = json.loads(self.rfile.read(length).decode("utf-8"))
        except (ValueError, UnicodeDecodeError) as exc:
            self._fail(400, ParseError("invalid JSON body: %s" % exc))
            return
        try:
            self._send(200, fn(doc))
        except ParseError as exc:
            self._fail(400, exc)
        except PlaneConfigError as exc:
            self._fail(422, exc)


def make_server(host: str = "127.0.0.1", port: int = 8642) -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), Handler)


def serve(host: str = "127.0.0.1", port: int = 8642):
    httpd = make_server(host, port)
    print("planeconfig service on http://%s:%d" % (host, port))
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()
