"""JSON-over-HTTP API hosting live games and analysis for interactive play.

Sessions live in memory; the move history is the source of truth and the
stored state is re-derived from it (and re-checked against it) on every
mutation.  Bot seats advance synchronously inside the request up to a
time cap; if a slow bot exceeds it the response is flagged
``bot_pending`` and clients make progress by polling GET /games/{id}.

Endpoints (all JSON, UTF-8; errors are {"code": ..., "message": ...}):

    POST /games                     create a session
    GET  /games/{id}                fetch (and advance pending bots)
    POST /games/{id}/moves          play a human move
    GET  /games/{id}/analysis       per-move what-if evaluation
    GET  /decompose?x=...           legal decomposition of x
    GET  /sequence?upTo=k           terms a_1..a_k
"""

from __future__ import annotations

import json
import math
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import sequence
from .decomposition import greedy_decompose, summand_count
from .game import GameState, IllegalMoveError, Move, apply_move, initial_state, is_terminal, legal_moves
from .solver import TeamSpec, solve_from_state
from .strategies import STRATEGY_NAMES, Strategy, make_strategy

DEFAULT_BOT_TIME_CAP = 2.0


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class CreateGameRequest(BaseModel):
    n: int
    p: int = 2
    seats: Optional[list[str]] = None  # "human" or a strategy name, one per seat
    seed: int = 0
    budget: Optional[int] = None  # for "optimal" bot seats


class MoveRequest(BaseModel):
    kind: str
    index: int


@dataclass
class GameSession:
    id: str
    n: int
    p: int
    seats: list[str]
    state: GameState
    bots: dict[int, Strategy]
    history: list[tuple[int, Move]] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    bot_pending: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)

    def seat_to_move(self) -> Optional[int]:
        if is_terminal(self.state):
            return None
        return len(self.history) % self.p + 1

    def winner(self) -> Optional[int]:
        if not is_terminal(self.state) or not self.history:
            return None
        return self.history[-1][0]

    def check_replay(self) -> None:
        """History replayed from scratch must reproduce the stored state."""
        state = initial_state(self.n)
        for _, move in self.history:
            state = apply_move(state, move)
        if state != self.state:
            raise ApiError(500, "replay_mismatch", "session state diverged from history")

    def view(self) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "p": self.p,
            "seats": list(self.seats),
            "state": self.state.to_json(),
            "legal_moves": [m.to_json() for m in legal_moves(self.state)],
            "to_move": self.seat_to_move(),
            "bot_pending": self.bot_pending,
            "history": [{"seat": s, "move": m.to_json()} for s, m in self.history],
            "winner": self.winner(),
            "created": self.created,
            "updated": self.updated,
        }


def create_app(
    persist_dir: str | None = None,
    bot_time_cap: float = DEFAULT_BOT_TIME_CAP,
) -> FastAPI:
    app = FastAPI(title="zeckgame")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, GameSession] = {}
    persist_path = Path(persist_dir) if persist_dir else None

    def persist(session: GameSession, record: dict) -> None:
        if persist_path is None:
            return
        persist_path.mkdir(parents=True, exist_ok=True)
        with open(persist_path / f"{session.id}.jsonl", "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def restore_sessions() -> None:
        if persist_path is None or not persist_path.is_dir():
            return
        for log in sorted(persist_path.glob("*.jsonl")):
            with open(log, encoding="utf-8") as fh:
                records = [json.loads(line) for line in fh if line.strip()]
            if not records or records[0].get("event") != "create":
                continue
            head = records[0]
            session = _new_session(
                head["id"], head["n"], head["p"], head["seats"],
                head["seed"], head.get("budget"),
            )
            for rec in records[1:]:
                move = Move.from_json(rec["move"])
                session.state = apply_move(session.state, move)
                session.history.append((rec["seat"], move))
            session.check_replay()
            sessions[session.id] = session

    def _new_session(sid, n, p, seats, seed, budget) -> GameSession:
        bots = {
            i + 1: make_strategy(name, seed=seed + i, budget=budget)
            for i, name in enumerate(seats)
            if name != "human"
        }
        return GameSession(sid, n, p, list(seats), initial_state(n), bots)

    def advance_bots(session: GameSession) -> None:
        """Apply bot moves until a human turn, terminal, or the time cap.

        At least one move is applied per call when a bot is to move, so
        polling always makes progress even under a tiny cap.
        """
        deadline = time.monotonic() + bot_time_cap
        moved = False
        while True:
            seat = session.seat_to_move()
            if seat is None or session.seats[seat - 1] == "human":
                session.bot_pending = False
                return
            if moved and time.monotonic() > deadline:
                session.bot_pending = True
                return
            moved = True
            move = session.bots[seat].choose(session.state)
            session.state = apply_move(session.state, move)
            session.history.append((seat, move))
            session.updated = time.time()
            persist(session, {"event": "move", "seat": seat, "move": move.to_json()})

    def get_session(game_id: str) -> GameSession:
        session = sessions.get(game_id)
        if session is None:
            raise ApiError(404, "unknown_game", f"no session {game_id!r}")
        return session

    @app.exception_handler(ApiError)
    async def on_api_error(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message},
        )

    @app.post("/games")
    def create_game(req: CreateGameRequest):
        if req.n < 2:
            raise ApiError(400, "degenerate_game",
                           f"games need n >= 2 (n={req.n} has no mover)")
        if req.p < 2:
            raise ApiError(400, "invalid_players", f"need p >= 2 seats, got {req.p}")
        seats = req.seats if req.seats is not None else ["human"] * req.p
        if len(seats) != req.p:
            raise ApiError(400, "invalid_seats",
                           f"expected {req.p} seat controllers, got {len(seats)}")
        for name in seats:
            if name != "human" and name not in STRATEGY_NAMES:
                raise ApiError(400, "unknown_strategy",
                               f"{name!r} is not 'human' or one of {', '.join(STRATEGY_NAMES)}")
        session = _new_session(uuid.uuid4().hex, req.n, req.p, seats, req.seed, req.budget)
        sessions[session.id] = session
        persist(session, {
            "event": "create", "id": session.id, "n": req.n, "p": req.p,
            "seats": seats, "seed": req.seed, "budget": req.budget,
        })
        with session.lock:
            advance_bots(session)
            session.check_replay()
        return session.view()

    @app.get("/games/{game_id}")
    def get_game(game_id: str):
        session = get_session(game_id)
        if session.bot_pending and session.lock.acquire(blocking=False):
            try:
                advance_bots(session)
                session.check_replay()
            finally:
                session.lock.release()
        return session.view()

    @app.post("/games/{game_id}/moves")
    def post_move(game_id: str, req: MoveRequest):
        session = get_session(game_id)
        if not session.lock.acquire(blocking=False):
            raise ApiError(409, "conflict", "another move for this session is in flight")
        try:
            seat = session.seat_to_move()
            if seat is None:
                raise ApiError(409, "game_over", "the game is already complete")
            if session.seats[seat - 1] != "human":
                raise ApiError(409, "wrong_turn", f"seat {seat} is a bot; poll until a human turn")
            try:
                move = Move.from_json({"kind": req.kind, "index": req.index})
                session.state = apply_move(session.state, move)
            except (IllegalMoveError, ValueError) as exc:
                raise ApiError(400, "illegal_move", str(exc))
            session.history.append((seat, move))
            session.updated = time.time()
            persist(session, {"event": "move", "seat": seat, "move": move.to_json()})
            advance_bots(session)
            session.check_replay()
        finally:
            session.lock.release()
        return session.view()

    @app.get("/games/{game_id}/analysis")
    def get_analysis(game_id: str, budget: Optional[int] = None):
        session = get_session(game_id)
        state = session.state
        seat = session.seat_to_move()
        lz = summand_count(greedy_decompose(session.n))
        k = len(state.counts)
        max_step = max(k - 1, 1)
        moves = []
        if seat is not None:
            spec = TeamSpec(session.p, frozenset({seat}))
            for move in legal_moves(state):
                child = apply_move(state, move)
                slack = child.total_terms() - lz
                entry = {
                    "move": move.to_json(),
                    "resulting_state": child.to_json(),
                    "min_remaining_moves": math.ceil(slack / max_step),
                    "max_remaining_moves": slack,
                    "budget_exhausted": False,
                    "winning": None,  # can the mover still force the last move?
                }
                if is_terminal(child):
                    entry["winning"] = True
                else:
                    result = solve_from_state(child, seat % session.p + 1, spec, budget)
                    if result.budget_exhausted:
                        entry["budget_exhausted"] = True
                    else:
                        entry["winning"] = result.verdict
                moves.append(entry)
        return {
            "id": session.id,
            "to_move": seat,
            "terminal": seat is None,
            "winner": session.winner(),
            "moves": moves,
        }

    @app.get("/decompose")
    def decompose(x: str):
        try:
            value = int(x)
        except ValueError:
            raise ApiError(400, "invalid_request", f"x must be a decimal integer, got {x!r}")
        if value < 1:
            raise ApiError(400, "invalid_request", f"x must be >= 1, got {value}")
        d = greedy_decompose(value)
        return {
            "x": str(value),
            "coeffs": list(d.coeffs),
            "summands": summand_count(d),
            "pretty": str(d),
        }

    @app.get("/sequence")
    def sequence_terms(upTo: int):
        if upTo < 1:
            raise ApiError(400, "invalid_request", f"upTo must be >= 1, got {upTo}")
        if upTo > 500:
            raise ApiError(400, "invalid_request", "upTo is capped at 500 terms")
        return {"terms": [str(t) for t in sequence.terms(upTo)]}

    restore_sessions()
    return app


app = create_app()
