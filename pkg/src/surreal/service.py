"""JSON-over-HTTP facade for the calculator.

Endpoints:
  POST /api/eval          {"session": id, "input": statement} -> EvalResponse
  GET  /api/tree?depth=N  genealogy dump to depth N (N <= 6)
  GET  /api/health        liveness probe
  GET  /...               static files for the web UI

One genealogy tree and one engine are shared by every session (they cache
pure mathematics); variable environments are per-session.  Requests are
evaluated one at a time behind a lock, since the engine itself is
single-threaded.
"""

from __future__ import annotations

import json
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .engine import Engine, Strategy
from .errors import SurrealError
from .lang import BoolValue, eval_ast, format_value, parse
from .forms import render_form

MAX_INPUT_BYTES = 64 * 1024
MAX_TREE_DEPTH = 6

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>surreal calculator</title></head>
<body><h1>surreal calculator service</h1>
<p>The web UI is not built. POST JSON to <code>/api/eval</code>, e.g.</p>
<pre>curl -s -X POST localhost:PORT/api/eval \\
  -d '{"session":"s1","input":"2*2"}'</pre>
</body></html>
"""

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".ico": "image/x-icon",
}


class CalcService:
    """Shared engine + per-session environments."""

    def __init__(self, engine: Engine | None = None,
                 static_dir: str | Path | None = None):
        self.engine = engine if engine is not None else Engine()
        self.sessions: dict[str, dict] = {}
        self.lock = threading.Lock()
        self.static_dir = Path(static_dir) if static_dir else None

    # -- eval --------------------------------------------------------------

    def handle_eval(self, payload) -> tuple[int, dict]:
        if not isinstance(payload, dict):
            return 400, _protocol_error("request body must be a JSON object")
        session = payload.get("session")
        statement = payload.get("input")
        if not isinstance(session, str) or not session:
            return 400, _protocol_error("session must be a nonempty string")
        if not isinstance(statement, str):
            return 400, _protocol_error("input must be a string")
        if len(statement.encode("utf-8")) > MAX_INPUT_BYTES:
            return 400, _protocol_error("input exceeds 64 KiB")

        with self.lock:
            env = self.sessions.setdefault(session, {})
            before = self.engine.stats_snapshot()
            start = time.perf_counter()
            if statement.lstrip().startswith(":"):
                response = self._command(statement.strip())
            else:
                response = self._evaluate(statement, env)
            millis = (time.perf_counter() - start) * 1000.0
            delta = self.engine.stats_snapshot().delta(before)
        response["millis"] = millis
        response["stats"] = {
            "geCalls": delta.ge_calls,
            "plusEvals": delta.plus_evals,
            "timesEvals": delta.times_evals,
        }
        return 200, response

    def _evaluate(self, statement: str, env: dict) -> dict:
        try:
            value = eval_ast(parse(statement), env, self.engine)
        except SurrealError as exc:
            return {"ok": False, "display": f"error: {exc}"}
        display = format_value(value)
        if isinstance(value, BoolValue):
            return {"ok": True, "display": display}
        node = value.node
        return {
            "ok": True,
            "display": display,
            "name": str(node.name),
            "form": render_form(node.form),
            "generation": node.generation,
        }

    def _command(self, statement: str) -> dict:
        parts = statement.split(None, 1)
        if parts[0] == ":strategy" and len(parts) == 2:
            try:
                strategy = Strategy(parts[1].strip())
            except ValueError:
                return {"ok": False,
                        "display": "error: strategy must be naive, memo or parents"}
            self.engine.set_strategy(strategy)
            return {"ok": True, "display": f"strategy set to {strategy.value}"}
        return {"ok": False, "display": f"error: unknown command {parts[0]}"}

    # -- tree ----------------------------------------------------------------

    def handle_tree(self, depth) -> tuple[int, dict]:
        try:
            depth = int(depth)
        except (TypeError, ValueError):
            return 400, _protocol_error("depth must be an integer")
        if not 0 <= depth <= MAX_TREE_DEPTH:
            return 400, _protocol_error(
                f"depth must be between 0 and {MAX_TREE_DEPTH}")
        with self.lock:
            dump = "\n".join(self.engine.tree.dump(depth))
        return 200, {"ok": True, "depth": depth, "dump": dump}

    # -- static ---------------------------------------------------------------

    def static_file(self, path: str):
        """(content-type, bytes) for a UI asset, or None for 404."""
        name = path.lstrip("/") or "index.html"
        if self.static_dir is None:
            if name == "index.html":
                return "text/html; charset=utf-8", _FALLBACK_PAGE.encode()
            return None
        base = self.static_dir.resolve()
        target = (base / name).resolve()
        if base not in target.parents and target != base:
            return None
        if not target.is_file():
            return None
        ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        return ctype, target.read_bytes()


def _protocol_error(message: str) -> dict:
    return {"ok": False, "display": f"error: {message}"}


class _Handler(BaseHTTPRequestHandler):
    service: CalcService  # set by make_server

    def log_message(self, *args):  # quiet
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self):
        if urlparse(self.path).path != "/api/eval":
            self._send_json(404, _protocol_error("no such endpoint"))
            return
        length = int(self.headers.get("Content-Length", 0))
        if length > MAX_INPUT_BYTES * 2:
            self._send_json(400, _protocol_error("request too large"))
            return
        raw = self.rfile.read(length)
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError:
            self._send_json(400, _protocol_error("malformed JSON"))
            return
        status, response = self.service.handle_eval(payload)
        self._send_json(status, response)

    def do_GET(self):
        url = urlparse(self.path)
        if url.path == "/api/health":
            self._send_json(200, {"ok": True, "status": "ok"})
            return
        if url.path == "/api/tree":
            params = parse_qs(url.query)
            depth = params.get("depth", [None])[0]
            status, response = self.service.handle_tree(depth)
            self._send_json(status, response)
            return
        if url.path.startswith("/api/"):
            self._send_json(404, _protocol_error("no such endpoint"))
            return
        asset = self.service.static_file(url.path)
        if asset is None:
            self.send_response(404)
            self.end_headers()
            return
        ctype, body = asset
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


def make_server(port: int, engine: Engine | None = None,
                static_dir=None) -> ThreadingHTTPServer:
    service = CalcService(engine, static_dir)
    handler = type("BoundHandler", (_Handler,), {"service": service})
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    server.calc_service = service
    return server


def serve(port: int, engine: Engine | None = None, static_dir=None) -> None:
    server = make_server(port, engine, static_dir)
    host, actual_port = server.server_address
    print(f"surreal calculator listening on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    finally:
        server.server_close()
