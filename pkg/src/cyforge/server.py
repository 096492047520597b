"""Session HTTP service for the mutation explorer.

Sessions live in memory, one mutation history each.  Reads are concurrent;
writes on a session are single-writer: a mutate/undo that arrives while
another write holds the session returns 409.  With a state directory (flag
--state-dir or CYFORGE_STATE_DIR) every acknowledged write snapshots the
session to disk and sessions are reloaded lazily on access.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path as FsPath
from typing import Optional
from urllib.parse import parse_qs, urlparse

from . import completion, io_doc, mutation
from .errors import CyforgeError, LoopAtVertex, UnknownVertex, ValidationError


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


class Session:
    def __init__(self, session_id: str, history: mutation.MutationHistory, created: str | None = None):
        self.id = session_id
        self.history = history
        self.created = created or _now()
        self.modified = self.created
        self.write_lock = threading.Lock()

    def touch(self) -> None:
        self.modified = _now()

    def snapshot(self) -> dict:
        return {
            "session_id": self.id,
            "created": self.created,
            "modified": self.modified,
            "initial": json.loads(io_doc.emit_qp(self.history.initial)),
            "steps": [
                {"vertex": s.vertex, "reduce": s.reduced}
                for s in self.history.steps
            ],
        }

    @staticmethod
    def restore(data: dict) -> "Session":
        initial = io_doc.parse_qp(json.dumps(data["initial"]))
        history = mutation.MutationHistory(initial)
        session = Session(data["session_id"], history, created=data.get("created"))
        for step in data.get("steps", []):
            history.mutate(step["vertex"], step.get("reduce", False))
        session.modified = data.get("modified", session.created)
        return session


class SessionStore:
    def __init__(self, state_dir: Optional[str] = None):
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()
        self.state_dir = FsPath(state_dir) if state_dir else None
        if self.state_dir:
            self.state_dir.mkdir(parents=True, exist_ok=True)

    def create(self, qp: mutation.QuiverWithPotential) -> Session:
        session = Session(uuid.uuid4().hex, mutation.MutationHistory(qp))
        with self.lock:
            self.sessions[session.id] = session
        self.persist(session)
        return session

    def get(self, session_id: str) -> Optional[Session]:
        with self.lock:
            session = self.sessions.get(session_id)
        if session is None and self.state_dir:
            path = self.state_dir / f"{session_id}.json"
            if path.exists():
                session = Session.restore(json.loads(path.read_text()))
                with self.lock:
                    self.sessions.setdefault(session_id, session)
                    session = self.sessions[session_id]
        return session

    def persist(self, session: Session) -> None:
        if self.state_dir:
            path = self.state_dir / f"{session.id}.json"
            path.write_text(json.dumps(session.snapshot(), indent=2))


def _qp_data(qp: mutation.QuiverWithPotential) -> dict:
    return json.loads(io_doc.emit_qp(qp))


def session_view(session: Session) -> dict:
    history = session.history
    return {
        "session_id": session.id,
        "created": session.created,
        "modified": session.modified,
        "qp": _qp_data(history.current),
        "history": [
            {"vertex": s.vertex, "reduce": s.reduced, "removed": s.removed_pairs}
            for s in history.steps
        ],
    }


def make_handler(store: SessionStore):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # keep test output quiet
            pass

        def _send(self, status: int, payload: dict) -> None:
            body = json.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _error(self, status: int, code: str, message: str) -> None:
            self._send(status, {"code": code, "message": message})

        def _body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b"{}"
            try:
                data = json.loads(raw.decode() or "{}")
            except json.JSONDecodeError as exc:
                raise ValidationError(f"bad JSON body: {exc.msg}") from None
            if not isinstance(data, dict):
                raise ValidationError("body must be a JSON object")
            return data

        def _session_or_404(self, session_id: str) -> Optional[Session]:
            session = store.get(session_id)
            if session is None:
                self._error(404, "UnknownSession", f"no session {session_id}")
            return session

        def do_POST(self) -> None:
            parts = [p for p in urlparse(self.path).path.split("/") if p]
            try:
                if parts == ["sessions"]:
                    data = self._body()
                    qp = io_doc.parse_qp(json.dumps(data))
                    session = store.create(qp)
                    self._send(201, {"session_id": session.id})
                    return
                if len(parts) == 3 and parts[0] == "sessions" and parts[2] in ("mutate", "undo"):
                    session = self._session_or_404(parts[1])
                    if session is None:
                        return
                    if not session.write_lock.acquire(blocking=False):
                        self._error(409, "ConcurrentWrite", "a write is in progress")
                        return
                    try:
                        if parts[2] == "mutate":
                            data = self._body()
                            vertex = data.get("vertex")
                            if not isinstance(vertex, str):
                                raise ValidationError("mutate needs a vertex name")
                            session.history.mutate(vertex, bool(data.get("reduce", False)))
                        else:
                            session.history.undo()
                        session.touch()
                        store.persist(session)
                        payload = session_view(session)
                    finally:
                        # release before replying so a sequential client's next
                        # write never races the lock
                        session.write_lock.release()
                    self._send(200, payload)
                    return
                self._error(404, "NotFound", self.path)
            except LoopAtVertex as exc:
                self._error(422, "LoopAtVertex", str(exc))
            except UnknownVertex as exc:
                self._error(422, "UnknownVertex", str(exc))
            except ValidationError as exc:
                self._error(422, "ValidationError", str(exc))
            except CyforgeError as exc:
                self._error(500, "InternalError", str(exc))

        def do_GET(self) -> None:
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            try:
                if len(parts) >= 2 and parts[0] == "sessions":
                    session = self._session_or_404(parts[1])
                    if session is None:
                        return
                    if len(parts) == 2:
                        self._send(200, session_view(session))
                        return
                    if parts[2] == "jacobian":
                        params = parse_qs(url.query)
                        max_len = int(params.get("max_len", ["4"])[0])
                        qp = session.history.current
                        G = completion.ginzburg(qp.quiver, qp.W, 3)
                        q = completion.jacobian_quotient(G, max_len)
                        self._send(
                            200,
                            {
                                "dims": list(q.dims),
                                "total": q.total_dimension,
                                "stabilized": q.stabilized,
                            },
                        )
                        return
                    if parts[2] == "dot":
                        self._send(200, {"dot": io_doc.export_dot(session.history.current)})
                        return
                self._error(404, "NotFound", self.path)
            except ValidationError as exc:
                self._error(422, "ValidationError", str(exc))
            except (ValueError, CyforgeError) as exc:
                self._error(422, "ValidationError", str(exc))

    return Handler


def make_server(port: int, state_dir: Optional[str] = None) -> ThreadingHTTPServer:
    state_dir = state_dir or os.environ.get("CYFORGE_STATE_DIR") or None
    store = SessionStore(state_dir)
    server = ThreadingHTTPServer(("127.0.0.1", port), make_handler(store))
    server.store = store  # type: ignore[attr-defined]
    return server


def serve(port: int, state_dir: Optional[str] = None) -> None:
    server = make_server(port, state_dir)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
