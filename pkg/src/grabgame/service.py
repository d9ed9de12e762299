"""HTTP play service: humans versus the perfect engine.

Sessions are in-memory with idle expiry and no persistence.  Every number
that crosses the wire is exact: scores and evaluations are decimal strings
in the units of the original instance document (rescaled by the ingestion
scale factor).  The engine always plays perfectly, breaking ties toward
the lowest vertex id.

Endpoints (JSON bodies; errors are {code, message}):
  POST /sessions {instance, engineRole}   -> {sessionId, view}
  GET  /sessions/{id}                     -> view
  POST /sessions/{id}/moves {vertex}      -> view
  POST /sessions/{id}/engine-move         -> {view, evals}
  GET  /sessions/{id}/evals               -> evals
  POST /sessions/{id}/undo                -> view

View schema: {n, edges, weights, remaining, history, scores, turn,
legalMoves, finished, verdict}.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .graphs import (
    InstanceError,
    WeightedGraph,
    bits,
    fraction_to_decimal,
    is_connected,
    original_weight,
    parse_instance,
)
from .solver import SolveContext

ROLES = ("alice", "bob", "none")


class ServiceError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _bad_request(msg):
    return ServiceError(400, "bad_request", msg)


def _illegal_move(msg):
    return ServiceError(400, "illegal_move", msg)


def _wrong_turn(msg):
    return ServiceError(409, "wrong_turn", msg)


def _unknown_session(sid):
    return ServiceError(404, "unknown_session", f"no session {sid}")


@dataclass
class Session:
    id: str
    graph: WeightedGraph
    engine_role: str
    ctx: SolveContext
    history: list = field(default_factory=list)  # (vertex, mover)
    remaining: int = 0
    scores: dict = field(default_factory=lambda: {"alice": 0, "bob": 0})
    last_access: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def turn(self) -> str:
        return "alice" if len(self.history) % 2 == 0 else "bob"

    @property
    def finished(self) -> bool:
        return self.remaining == 0

    def legal_moves(self) -> list[int]:
        if self.finished:
            return []
        return list(bits(self.ctx.legal_moves(self.remaining)))

    def apply(self, vertex: int) -> None:
        mover = self.turn
        self.scores[mover] += self.graph.weights[vertex]
        self.history.append((vertex, mover))
        self.remaining &= ~(1 << vertex)

    def undo_last(self) -> None:
        vertex, mover = self.history.pop()
        self.scores[mover] -= self.graph.weights[vertex]
        self.remaining |= 1 << vertex

    def units(self, value: int) -> str:
        return fraction_to_decimal(Fraction(value, self.graph.scale))

    def verdict(self) -> str | None:
        if not self.finished:
            return None
        # ties count for Alice: she wins with at least half the total
        return "alice" if 2 * self.scores["alice"] >= self.graph.total_weight else "bob"

    def view(self) -> dict:
        g = self.graph
        return {
            "n": g.n,
            "edges": [list(e) for e in g.edges()],
            "weights": [original_weight(g, v) for v in range(g.n)],
            "remaining": list(bits(self.remaining)),
            "history": [{"vertex": v, "mover": m} for v, m in self.history],
            "scores": {k: self.units(v) for k, v in self.scores.items()},
            "turn": None if self.finished else self.turn,
            "legalMoves": self.legal_moves(),
            "finished": self.finished,
            "verdict": self.verdict(),
        }

    def evals(self) -> list[dict]:
        if self.finished:
            raise _bad_request("session is finished; no moves to evaluate")
        out = []
        for ev in self.ctx.evaluate(self.remaining):
            out.append({
                "vertex": ev.vertex,
                "valueAfter": self.units(ev.value_after),
                "optimal": ev.optimal,
            })
        return out


class SessionStore:
    """In-memory sessions with idle expiry; one logical writer per session."""

    def __init__(self, ttl: float = 3600.0, clock=time.monotonic):
        self.ttl = ttl
        self.clock = clock
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _expire(self) -> None:
        now = self.clock()
        stale = [sid for sid, s in self._sessions.items()
                 if now - s.last_access > self.ttl]
        for sid in stale:
            del self._sessions[sid]

    def create(self, instance, engine_role: str) -> Session:
        try:
            g = parse_instance(instance)
        except InstanceError as e:
            raise _bad_request(f"bad instance: {e}")
        if not is_connected(g):
            raise _bad_request("instance graph is disconnected; the game is undefined")
        if engine_role not in ROLES:
            raise _bad_request(f"engineRole must be one of {ROLES}")
        sid = uuid.uuid4().hex
        session = Session(
            id=sid, graph=g, engine_role=engine_role, ctx=SolveContext(g),
            remaining=g.full_mask, last_access=self.clock(),
        )
        with self._lock:
            self._expire()
            self._sessions[sid] = session
        return session

    def get(self, sid: str) -> Session:
        with self._lock:
            self._expire()
            session = self._sessions.get(sid)
        if session is None:
            raise _unknown_session(sid)
        session.last_access = self.clock()
        return session


def create_app(session_ttl: float = 3600.0, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="grabgame service")
    store = SessionStore(ttl=session_ttl)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def on_service_error(request: Request, exc: ServiceError):
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": exc.message})

    @app.post("/sessions")
    def create_session(body: dict):
        instance = body.get("instance")
        if instance is None:
            raise _bad_request("missing instance")
        role = body.get("engineRole", "none")
        session = store.create(instance, role)
        return {"sessionId": session.id, "view": session.view()}

    @app.get("/sessions/{sid}")
    def get_view(sid: str):
        return store.get(sid).view()

    @app.post("/sessions/{sid}/moves")
    def human_move(sid: str, body: dict):
        session = store.get(sid)
        vertex = body.get("vertex")
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            raise _bad_request("vertex must be an integer")
        with session.lock:
            if session.finished:
                raise _illegal_move("session is finished")
            if session.turn == session.engine_role:
                raise _wrong_turn("it is the engine's turn")
            if vertex not in session.legal_moves():
                raise _illegal_move(
                    f"vertex {vertex} is not a legal grab (cutvertex, absent or removed)")
            session.apply(vertex)
            return session.view()

    @app.post("/sessions/{sid}/engine-move")
    def engine_move(sid: str):
        session = store.get(sid)
        with session.lock:
            if session.finished:
                raise _illegal_move("session is finished")
            if session.engine_role == "none" or session.turn != session.engine_role:
                raise _wrong_turn("it is not the engine's turn")
            evals = session.evals()
            best = session.ctx.best_move(session.remaining)
            session.apply(best)
            return {"view": session.view(), "evals": evals}

    @app.get("/sessions/{sid}/evals")
    def get_evals(sid: str):
        session = store.get(sid)
        with session.lock:
            return session.evals()

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        session = store.get(sid)
        with session.lock:
            if not session.history:
                raise _bad_request("nothing to undo")
            session.undo_last()
            return session.view()

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
