"""Executable play policies: combine-only construction, the protagonist
priority strategy, and the pluggable bot registry.

Two results drive this module.  A game can always be played to the end
on combining moves alone (build the highest decomposition terms first),
which realizes the shortest possible game.  And in a two-player game,
one player making the first available move of C_3, C_2, C_4, C_5, ...,
C_k, C_1 forces play to finish without any splitting move, as long as
1's remain; ``verify_no_split_reachable`` checks that claim mechanically
against every possible opponent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .decomposition import greedy_decompose
from .game import (
    COMBINE,
    SPLIT,
    GameState,
    Move,
    apply_move,
    initial_state,
    is_legal_move,
    is_terminal,
    legal_moves,
)
from .solver import TeamSpec, solve_from_state


class StrategyInapplicableError(RuntimeError):
    """The protagonist priority strategy needs a legal combining move."""


@dataclass(frozen=True)
class Strategy:
    """A named total policy: every non-terminal state gets a legal move."""

    name: str
    choose: Callable[[GameState], Move]


def combine_only_playout(n: int) -> list[Move]:
    """A complete combine-only game on n; its length is exactly MC(n).

    Builds the terms of the final decomposition from the top index down;
    one a_j is assembled by recursively producing j-1 copies of a_{j-1}
    plus one a_{j-2} and combining them.
    """
    if n < 1:
        raise ValueError(f"game requires n >= 1, got {n}")
    state = initial_state(n)
    history: list[Move] = []

    def play(move: Move) -> None:
        nonlocal state
        state = apply_move(state, move)
        history.append(move)

    def build(j: int) -> None:
        if j == 1:
            return  # 1's are the raw material
        if j == 2:
            play(Move(COMBINE, 1))
            return
        for _ in range(j - 1):
            build(j - 1)
        build(j - 2)
        play(Move(COMBINE, j - 1))

    coeffs = greedy_decompose(n).coeffs
    for j in range(len(coeffs), 0, -1):
        for _ in range(coeffs[j - 1]):
            build(j)
    assert is_terminal(state), "combine-only construction must land on the decomposition"
    return history


def _priority_order(k: int) -> list[int]:
    # C_3 first, then C_2, then ascending, with C_1 as the last resort.
    return [3, 2, *range(4, k + 1), 1]


def protagonist_move(state: GameState, k: Optional[int] = None) -> Move:
    """First legal combine in the order C_3, C_2, C_4, ..., C_k, C_1.

    ``k`` defaults to the game's fixed top index.  Raises
    :class:`StrategyInapplicableError` when no combining move is legal
    (outside the strategy's hypothesis).
    """
    if k is None:
        k = len(state.counts)
    for i in _priority_order(k):
        move = Move(COMBINE, i)
        if is_legal_move(state, move):
            return move
    raise StrategyInapplicableError("no combining move is legal here")


def verify_no_split_reachable(n: int, protagonist_seat: int) -> bool:
    """Exhaustively check that the priority strategy shuts out splits.

    The protagonist (seat 1 or 2) always plays ``protagonist_move``; the
    antagonist tries every legal reply.  True iff, for as long as 1's
    remain in play, no antagonist turn ever has a legal split and the
    protagonist is never forced to split.  Branches where the 1's run
    out are outside the strategy's hypothesis and end the check (the
    antagonist can sometimes force a late split there, e.g. reaching
    three 2's and no 1's on n = 6 when the protagonist moves second).
    """
    if protagonist_seat not in (1, 2):
        raise ValueError(f"protagonist_seat must be 1 or 2, got {protagonist_seat}")
    if n < 2:
        raise ValueError(f"games need n >= 2, got {n}")
    memo: dict[tuple[tuple[int, ...], bool], bool] = {}

    def walk(state: GameState, protagonist_turn: bool) -> bool:
        if is_terminal(state) or state.counts[0] == 0:
            return True
        key = (state.counts, protagonist_turn)
        got = memo.get(key)
        if got is not None:
            return got
        if protagonist_turn:
            try:
                move = protagonist_move(state)
            except StrategyInapplicableError:
                ok = False  # only splits remain: the strategy failed
            else:
                ok = walk(apply_move(state, move), False)
        else:
            moves = legal_moves(state)
            if any(m.kind == SPLIT for m in moves):
                ok = False
            else:
                ok = all(walk(apply_move(state, m), True) for m in moves)
        memo[key] = ok
        return ok

    return walk(initial_state(n), protagonist_seat == 1)


@dataclass
class SplitFreeReport:
    """Observed (not asserted) answer to: is *every* game on n split-free?"""

    n: int
    split_free: bool
    states_examined: int


def split_free_report(n: int) -> SplitFreeReport:
    """Walk all states reachable under arbitrary play, looking for a
    position with a legal split.  Exploration stops at the first one."""
    if n < 2:
        raise ValueError(f"games need n >= 2, got {n}")
    start = initial_state(n)
    seen = {start.counts}
    stack = [start]
    while stack:
        state = stack.pop()
        for move in legal_moves(state):
            if move.kind == SPLIT:
                return SplitFreeReport(n, False, len(seen))
            child = apply_move(state, move)
            if child.counts not in seen:
                seen.add(child.counts)
                stack.append(child)
    return SplitFreeReport(n, True, len(seen))


STRATEGY_NAMES = ("uniform", "combine-only", "protagonist", "max-split", "optimal")


def make_strategy(name: str, seed: int = 0, budget: Optional[int] = None) -> Strategy:
    """Instantiate a bot by its stable name (see STRATEGY_NAMES).

    uniform      seeded uniform choice among legal moves
    combine-only highest-index legal combine (finish big terms first)
    protagonist  the C_3, C_2, C_4, ..., C_1 priority strategy
    max-split    first legal split if any; stress-tests split handling
    optimal      two-player-optimal via the solver, within ``budget``

    Every policy falls back to the first legal move in canonical order
    when its preference does not apply, so all are total.
    """
    if name == "uniform":
        rng = random.Random(seed)

        def choose_uniform(state: GameState) -> Move:
            return rng.choice(legal_moves(state))

        return Strategy(name, choose_uniform)

    if name == "combine-only":

        def choose_combine(state: GameState) -> Move:
            moves = legal_moves(state)
            combines = [m for m in moves if m.kind == COMBINE]
            return combines[-1] if combines else moves[0]

        return Strategy(name, choose_combine)

    if name == "protagonist":

        def choose_protagonist(state: GameState) -> Move:
            try:
                return protagonist_move(state)
            except StrategyInapplicableError:
                return legal_moves(state)[0]

        return Strategy(name, choose_protagonist)

    if name == "max-split":

        def choose_split(state: GameState) -> Move:
            moves = legal_moves(state)
            for m in moves:
                if m.kind == SPLIT:
                    return m
            return moves[0]

        return Strategy(name, choose_split)

    if name == "optimal":
        spec = TeamSpec(2, frozenset({1}))  # mover's own team, opponent next

        def choose_optimal(state: GameState) -> Move:
            moves = legal_moves(state)
            for m in moves:
                if is_terminal(apply_move(state, m)):
                    return m
            for m in moves:
                result = solve_from_state(apply_move(state, m), 2, spec, budget)
                if not result.budget_exhausted and result.verdict:
                    return m
            return moves[0]

        return Strategy(name, choose_optimal)

    raise KeyError(f"unknown strategy {name!r}; known: {', '.join(STRATEGY_NAMES)}")


def bot_policies() -> dict[str, Callable[..., Strategy]]:
    """Registry of strategy factories keyed by their stable names."""
    return {name: (lambda nm: lambda **kw: make_strategy(nm, **kw))(name) for name in STRATEGY_NAMES}
