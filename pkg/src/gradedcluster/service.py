"""HTTP JSON session service backing the interactive explorer.

Sessions are held in memory; every state change is derived by replaying the
recorded history through the exact mutation engine, so the server holds no
mathematical state beyond the initial seed and the history.  Request
handling is serialized per session.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Dict, Optional

from .core import (GradedSeed, MutationPath, apply_path, seed_from_json,
                   seed_to_json)
from .exceptional import PRESET_NAMES, preset


@dataclass
class Session:
    id: str
    initial: GradedSeed
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def current(self) -> GradedSeed:
        return apply_path(self.initial, MutationPath.from_list(list(reversed(self.history))))

    def state(self) -> dict:
        cur = self.current()
        size = cur.matrix.size
        return {
            "id": self.id,
            "n": cur.n,
            "m": cur.m,
            "matrix": [list(row) for row in cur.matrix.rows],
            "degrees": [list(cur.degree(j + 1)) for j in range(size)],
            "denominators": [list(d) for d in cur.denominators],
            "last_variable_degree": (list(cur.degree(self.history[-1]))
                                     if self.history else None),
            "history": list(self.history),
            "labels": list(cur.labels) if cur.labels else None,
        }


class SessionStore:
    """In-memory sessions with optional JSON snapshot persistence."""

    def __init__(self, snapshot: Optional[str] = None):
        self.sessions: Dict[str, Session] = {}
        self.lock = threading.Lock()
        self.snapshot = snapshot
        if snapshot and os.path.exists(snapshot):
            self._load()

    def _load(self):
        with open(self.snapshot) as fh:
            data = json.load(fh)
        for sid, entry in data.items():
            session = Session(sid, seed_from_json(entry["seed"]))
            session.history = list(entry["history"])
            self.sessions[sid] = session

    def save(self):
        if not self.snapshot:
            return
        with self.lock:
            data = {sid: {"seed": seed_to_json(s.initial), "history": s.history}
                    for sid, s in self.sessions.items()}
        tmp = self.snapshot + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, self.snapshot)

    def create(self, seed: GradedSeed) -> Session:
        sid = uuid.uuid4().hex[:12]
        session = Session(sid, seed)
        with self.lock:
            self.sessions[sid] = session
        self.save()
        return session

    def get(self, sid: str) -> Optional[Session]:
        with self.lock:
            return self.sessions.get(sid)

    def drop(self, sid: str) -> bool:
        with self.lock:
            dropped = self.sessions.pop(sid, None) is not None
        self.save()
        return dropped


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def _search_degree_path(seed: GradedSeed, target, max_depth: int):
    """Breadth-first hunt for a path whose newest variable has the target
    degree; returns the path in right-to-left order or None."""
    r = seed.grading.r
    want = tuple(target) if isinstance(target, (list, tuple)) else (target,)
    if len(want) != r:
        raise ApiError(400, "target degree must have %d components" % r)
    seen = {seed.matrix.rows + seed.grading.rows}
    frontier = [(seed, ())]
    for _ in range(max_depth):
        nxt = []
        for s, steps in frontier:
            for k in range(1, s.n + 1):
                s2 = s.mutate(k)
                if s2.degree(k) == want:
                    return list((k,) + steps)
                tag = s2.matrix.rows + s2.grading.rows
                if tag not in seen:
                    seen.add(tag)
                    nxt.append((s2, (k,) + steps))
        frontier = nxt
    return None


class ExplorerHandler(BaseHTTPRequestHandler):
    store: SessionStore = None
    cors: bool = False

    # -- plumbing ---------------------------------------------------------

    def log_message(self, fmt, *args):
        pass

    def _send(self, status: int, payload):
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        if self.cors:
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(body)

    def _body(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        raw = self.rfile.read(length)
        try:
            return json.loads(raw)
        except json.JSONDecodeError:
            raise ApiError(400, "malformed JSON body")

    def _route(self, method: str):
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        try:
            if method == "GET" and parts == ["presets"]:
                return self._send(200, {"presets": list(PRESET_NAMES)})
            if method == "POST" and parts == ["sessions"]:
                return self._create_session()
            if len(parts) >= 2 and parts[0] == "sessions":
                session = self.store.get(parts[1])
                if session is None:
                    raise ApiError(404, "unknown session %r" % parts[1])
                rest = parts[2:]
                if method == "GET" and not rest:
                    return self._send(200, session.state())
                if method == "DELETE" and not rest:
                    self.store.drop(session.id)
                    return self._send(200, {"deleted": session.id})
                if method == "POST" and rest == ["mutate"]:
                    return self._mutate(session)
                if method == "POST" and rest == ["undo"]:
                    return self._undo(session)
                if method == "POST" and rest == ["search"]:
                    return self._search(session)
            raise ApiError(404, "no such endpoint")
        except ApiError as exc:
            return self._send(exc.status, {"error": exc.message})
        except Exception as exc:  # pragma: no cover - defensive
            return self._send(500, {"error": repr(exc)})

    # -- endpoints ----------------------------------------------------------

    def _create_session(self):
        body = self._body()
        if "preset" in body:
            name = body["preset"]
            try:
                seed = preset(name)
            except KeyError:
                raise ApiError(400, "unknown preset %r" % name)
        elif "seed" in body:
            try:
                seed = seed_from_json(body["seed"])
            except Exception as exc:
                raise ApiError(400, "bad seed: %s" % exc)
        else:
            raise ApiError(400, "body must contain 'preset' or 'seed'")
        session = self.store.create(seed)
        return self._send(200, {"id": session.id, "state": session.state()})

    def _mutate(self, session: Session):
        body = self._body()
        if "vertex" not in body:
            raise ApiError(400, "body must contain 'vertex'")
        vertex = body["vertex"]
        with session.lock:
            cur = session.current()
            if not isinstance(vertex, int) or not 1 <= vertex <= cur.matrix.size:
                raise ApiError(400, "vertex %r out of range" % (vertex,))
            if vertex > cur.n:
                raise ApiError(409, "vertex %d is frozen" % vertex)
            session.history.append(vertex)
            state = session.state()
        self.store.save()
        return self._send(200, state)

    def _undo(self, session: Session):
        with session.lock:
            if not session.history:
                raise ApiError(409, "history is empty")
            session.history.pop()
            state = session.state()
        self.store.save()
        return self._send(200, state)

    def _search(self, session: Session):
        body = self._body()
        if "target_degree" not in body:
            raise ApiError(400, "body must contain 'target_degree'")
        depth = int(body.get("max_depth", 5))
        if depth < 1 or depth > 12:
            raise ApiError(400, "max_depth must be in 1..12")
        with session.lock:
            path = _search_degree_path(session.current(), body["target_degree"], depth)
        return self._send(200, {"path": path})

    # -- http verbs ---------------------------------------------------------

    def do_GET(self):
        self._route("GET")

    def do_POST(self):
        self._route("POST")

    def do_DELETE(self):
        self._route("DELETE")

    def do_OPTIONS(self):
        self._send(200, {})


def make_server(port: int = 0, cors: bool = False,
                snapshot: Optional[str] = None) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (ExplorerHandler,),
                   {"store": SessionStore(snapshot), "cors": cors})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int, cors: bool = False,
          snapshot: Optional[str] = None):  # pragma: no cover - CLI entry
    server = make_server(port, cors, snapshot)
    print("explorer service on http://127.0.0.1:%d" % server.server_address[1])
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
