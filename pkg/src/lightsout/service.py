"""REST play service: in-memory game sessions over HTTP.

Sessions hold a compiled game (or its k-colored analogue), the current
state, and the full press history; the state is always exactly the initial
state advanced by the recorded presses.  An optional JSON snapshot file
(``LIGHTSOUT_SNAPSHOT``) persists initial states and histories across
restarts — current states are rebuilt by replaying, never trusted from
disk.

Status codes follow the usual conventions: 400 for malformed input, 404
for unknown sessions, 409 for hints towards unreachable targets (the body
carries the separating invariant residual), 422 for a parity-gated variant
on a mixed-parity graph, 503 when a minimum-weight hint would overrun the
search budget (``LIGHTSOUT_BUDGET``).
"""

from __future__ import annotations

import os
import random
import secrets
import threading
from typing import Optional, Union

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .colored import (
    ColoredState,
    PressCounts,
    press_colored,
    rule_matrix,
    solvable_colored,
    solve_general,
)
from .f2linalg import BitVector
from .game import (
    GameSpec,
    UnsupportedGraphError,
    apply_buttons,
    compile_game,
    equivalent,
    invariant_value,
    parse_variant,
    press,
    solve_game,
)
from .graph import Graph, generate, graph_from_json, graph_to_json
from .minweight import DEFAULT_BUDGET, BudgetExceededError, min_weight_solution

import json as _json

__all__ = ["create_app", "serve", "SessionStore", "DEFAULT_PORT"]

DEFAULT_PORT = 8000


def _parse_graph(doc: Union[str, dict]) -> Graph:
    if isinstance(doc, dict):
        return graph_from_json(doc)
    return generate(doc)


# ---------------------------------------------------------------------------
# sessions
# ---------------------------------------------------------------------------


class BoardSession:
    """A GF(2) game session (any variant)."""

    def __init__(self, sid: str, spec: GameSpec, initial: BitVector, history: list[int]):
        self.id = sid
        self.spec = spec
        self.initial = initial
        self.history = history
        self.lock = threading.Lock()
        self.state = initial
        for j in history:
            self.state = press(spec, self.state, j)

    def press(self, j: int) -> None:
        self.state = press(self.spec, self.state, j)
        self.history.append(j)

    def solvable(self) -> bool:
        return equivalent(self.spec, self.state, BitVector.zeros(self.spec.n))

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": "gf2",
            "graph": graph_to_json(self.spec.graph),
            "variant": str(self.spec.variant),
            "n": self.spec.n,
            "state": self.state.to_string(),
            "initial": self.initial.to_string(),
            "history": list(self.history),
            "solvable": self.solvable(),
        }

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "kind": "gf2",
            "graph": graph_to_json(self.spec.graph),
            "variant": str(self.spec.variant),
            "initial": self.initial.to_string(),
            "history": list(self.history),
        }


class ColorSession:
    """A k-colored session; presses bump a closed neighborhood mod k."""

    def __init__(self, sid: str, graph: Graph, initial: ColoredState, history: list[int]):
        self.id = sid
        self.graph = graph
        self.initial = initial
        self.history = history
        self.lock = threading.Lock()
        self.state = initial
        for j in history:
            self.state = press_colored(graph, self.state, j)

    @property
    def k(self) -> int:
        return self.initial.k

    def press(self, j: int) -> None:
        self.state = press_colored(self.graph, self.state, j)
        self.history.append(j)

    def solvable(self) -> bool:
        return solvable_colored(self.graph, self.state, ColoredState.uniform(self.k, self.graph.n))

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": "colored",
            "graph": graph_to_json(self.graph),
            "variant": "classic",
            "n": self.graph.n,
            "k": self.k,
            "state": list(self.state.values),
            "initial": list(self.initial.values),
            "history": list(self.history),
            "solvable": self.solvable(),
        }

    def snapshot(self) -> dict:
        return {
            "id": self.id,
            "kind": "colored",
            "graph": graph_to_json(self.graph),
            "k": self.k,
            "initial": list(self.initial.values),
            "history": list(self.history),
        }


Session = Union[BoardSession, ColorSession]


class SessionStore:
    """Thread-safe session map with optional write-behind JSON snapshots."""

    def __init__(self, snapshot_path: Optional[str] = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._snapshot_path = snapshot_path
        if snapshot_path and os.path.exists(snapshot_path):
            self._load(snapshot_path)

    def _load(self, path: str) -> None:
        with open(path, "r", encoding="utf-8") as fh:
            doc = _json.load(fh)
        for entry in doc.get("sessions", []):
            graph = graph_from_json(entry["graph"])
            history = [int(j) for j in entry.get("history", [])]
            if entry.get("kind") == "colored":
                initial = ColoredState(int(entry["k"]), tuple(int(v) for v in entry["initial"]))
                session: Session = ColorSession(entry["id"], graph, initial, history)
            else:
                spec = compile_game(graph, parse_variant(entry["variant"]))
                session = BoardSession(
                    entry["id"], spec, BitVector.from_string(entry["initial"]), history
                )
            self._sessions[session.id] = session

    def save(self) -> None:
        if not self._snapshot_path:
            return
        with self._lock:
            doc = {"sessions": [s.snapshot() for s in self._sessions.values()]}
        tmp = f"{self._snapshot_path}.tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            _json.dump(doc, fh)
        os.replace(tmp, self._snapshot_path)

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, sid: str) -> Session:
        with self._lock:
            if sid not in self._sessions:
                raise KeyError(sid)
            return self._sessions[sid]

    def remove(self, sid: str) -> None:
        with self._lock:
            if sid not in self._sessions:
                raise KeyError(sid)
            del self._sessions[sid]

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


# ---------------------------------------------------------------------------
# request bodies
# ---------------------------------------------------------------------------


class CreateGameBody(BaseModel):
    graph: Union[str, dict]
    variant: str = "classic"
    initial: Union[str, list[int]] = "random-solvable"
    k: Optional[int] = None


class PressBody(BaseModel):
    vertex: int


class HintBody(BaseModel):
    target: Union[str, list[int], None] = None
    mode: str = "any"


# ---------------------------------------------------------------------------
# the app
# ---------------------------------------------------------------------------


def create_app(
    store: Optional[SessionStore] = None,
    snapshot_path: Optional[str] = None,
    budget: Optional[int] = None,
) -> FastAPI:
    """Assemble the FastAPI app; environment variables fill missing knobs."""
    if snapshot_path is None:
        snapshot_path = os.environ.get("LIGHTSOUT_SNAPSHOT") or None
    if budget is None:
        budget = int(os.environ.get("LIGHTSOUT_BUDGET", DEFAULT_BUDGET))
    if store is None:
        store = SessionStore(snapshot_path)

    app = FastAPI(title="lightsout", version="0.1.0")
    app.state.store = store
    app.state.budget = budget
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    rng = random.Random()

    @app.exception_handler(StarletteHTTPException)
    async def _error_body(request: Request, exc: StarletteHTTPException) -> JSONResponse:
        # Structured errors (409 unsolvable, 503 budget) are emitted with their
        # fields at the top level; plain-string errors keep the default shape.
        if isinstance(exc.detail, dict):
            return JSONResponse(exc.detail, status_code=exc.status_code)
        return JSONResponse({"detail": exc.detail}, status_code=exc.status_code)

    def fetch(sid: str) -> Session:
        try:
            return store.get(sid)
        except KeyError:
            raise HTTPException(404, f"no session {sid!r}")

    def make_initial_board(spec: GameSpec, requested: Union[str, list[int]]) -> BitVector:
        n = spec.n
        if isinstance(requested, list):
            raise HTTPException(400, "a GF(2) game takes a bitstring initial state")
        if requested == "random":
            return BitVector(n, rng.getrandbits(n) if n else 0)
        if requested == "random-solvable":
            presses = BitVector(n, rng.getrandbits(n) if n else 0)
            return apply_buttons(spec, BitVector.zeros(n), presses)
        try:
            state = BitVector.from_string(requested)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        if state.n != n:
            raise HTTPException(400, f"initial state has {state.n} bits, expected {n}")
        return state

    def make_initial_colors(graph: Graph, k: int, requested: Union[str, list[int]]) -> ColoredState:
        n = graph.n
        if isinstance(requested, list):
            try:
                state = ColoredState(k, tuple(int(v) for v in requested))
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            if len(state) != n:
                raise HTTPException(400, f"initial state has {len(state)} values, expected {n}")
            return state
        if requested == "random":
            return ColoredState(k, tuple(rng.randrange(k) for _ in range(n)))
        if requested == "random-solvable":
            counts = PressCounts(k, tuple(rng.randrange(k) for _ in range(n)))
            moved = rule_matrix(graph).mul_vec(counts.counts)
            return ColoredState(k, tuple(v % k for v in moved))
        raise HTTPException(400, "a colored game takes a list of color values")

    @app.post("/games", status_code=201)
    def create_game(body: CreateGameBody) -> dict:
        try:
            graph = _parse_graph(body.graph)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        sid = secrets.token_hex(8)
        if body.k is not None:
            if body.variant != "classic":
                raise HTTPException(400, "colored games play the classic closed-neighborhood rule")
            if body.k < 2:
                raise HTTPException(400, "the color count k must be at least 2")
            try:
                initial = make_initial_colors(graph, body.k, body.initial)
                session: Session = ColorSession(sid, graph, initial, [])
            except ValueError as exc:
                raise HTTPException(400, str(exc))
        else:
            try:
                spec = compile_game(graph, parse_variant(body.variant))
            except UnsupportedGraphError as exc:
                raise HTTPException(422, str(exc))
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            initial = make_initial_board(spec, body.initial)
            session = BoardSession(sid, spec, initial, [])
        store.add(session)
        store.save()
        return session.to_json()

    @app.get("/games/{sid}")
    def get_game(sid: str) -> dict:
        return fetch(sid).to_json()

    @app.post("/games/{sid}/press")
    def press_button(sid: str, body: PressBody) -> dict:
        session = fetch(sid)
        with session.lock:
            try:
                session.press(body.vertex)
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            store.save()
            return session.to_json()

    @app.post("/games/{sid}/hint")
    def hint(sid: str, body: HintBody) -> dict:
        session = fetch(sid)
        if body.mode not in ("any", "min"):
            raise HTTPException(400, f"unknown hint mode {body.mode!r}")
        if isinstance(session, ColorSession):
            return _hint_colored(session, body)
        spec = session.spec
        if body.target is None:
            target = BitVector.zeros(spec.n)
        elif isinstance(body.target, str):
            try:
                target = BitVector.from_string(body.target)
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            if target.n != spec.n:
                raise HTTPException(400, f"target has {target.n} bits, expected {spec.n}")
        else:
            raise HTTPException(400, "a GF(2) game takes a bitstring target")
        state = session.state
        if body.mode == "min":
            try:
                result = min_weight_solution(spec.rule, state ^ target, budget=app.state.budget)
            except BudgetExceededError as exc:
                raise HTTPException(
                    503,
                    {
                        "error": "budget-exceeded",
                        "coset_size": exc.coset_size,
                        "budget": exc.budget,
                    },
                )
            if result is None:
                _raise_unreachable(spec, state, target)
            return result.to_json()
        solution = solve_game(spec, state, target)
        if solution is None:
            _raise_unreachable(spec, state, target)
        return solution.to_json()

    def _raise_unreachable(spec: GameSpec, state: BitVector, target: BitVector):
        residual = invariant_value(spec, state ^ target)
        raise HTTPException(409, {"error": "unsolvable", "residual": residual.to_string()})

    def _hint_colored(session: ColorSession, body: HintBody) -> dict:
        if body.mode == "min":
            raise HTTPException(400, "minimum-weight hints are defined for the GF(2) games")
        if body.target is None:
            target = ColoredState.uniform(session.k, session.graph.n)
        elif isinstance(body.target, list):
            try:
                target = ColoredState(session.k, tuple(int(v) for v in body.target))
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            if len(target) != session.graph.n:
                raise HTTPException(400, "target length does not match the graph")
        else:
            raise HTTPException(400, "a colored game takes a list of color values")
        counts = solve_general(session.graph, session.state, target)
        if counts is None:
            raise HTTPException(409, {"error": "unsolvable"})
        return {"k": counts.k, "counts": list(counts.counts), "total": counts.total()}

    @app.get("/games/{sid}/invariant")
    def invariant(sid: str) -> dict:
        session = fetch(sid)
        if isinstance(session, ColorSession):
            raise HTTPException(400, "the separating invariant is defined for the GF(2) games")
        j = session.spec.invariant
        return {
            "rows": [j.row(i).to_string() for i in range(j.rows)],
            "value": invariant_value(session.spec, session.state).to_string(),
        }

    @app.delete("/games/{sid}", status_code=204)
    def delete_game(sid: str) -> None:
        try:
            store.remove(sid)
        except KeyError:
            raise HTTPException(404, f"no session {sid!r}")
        store.save()

    return app


def serve(
    host: str = "127.0.0.1",
    port: Optional[int] = None,
    snapshot_path: Optional[str] = None,
    budget: Optional[int] = None,
) -> None:
    """Run the service under uvicorn (blocking)."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("LIGHTSOUT_PORT", DEFAULT_PORT))
    uvicorn.run(create_app(snapshot_path=snapshot_path, budget=budget), host=host, port=port)


if __name__ == "__main__":
    serve()
