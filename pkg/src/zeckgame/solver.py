"""Exhaustive analysis of the game DAG: forced-win verdicts, length
spectra, and the combine-count invariance check.

The total term count strictly decreases with every move, so the state
graph is a DAG and admits memoized retrograde-style search.  Verdicts
answer: can the queried team guarantee that one of its members makes the
last move, against *any* play by everyone else?  That worst-case-
coalition reading is the one the multiplayer strategy-stealing proofs
use, and at p = 2 it reduces to ordinary normal-play solving.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .game import COMBINE, GameState, Move, apply_move, initial_state, is_terminal, legal_moves


@dataclass(frozen=True)
class TeamSpec:
    """Who is asking: p seats move cyclically, `team` is the queried side."""

    p: int
    team: frozenset[int]
    first_mover: int = 1

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"need at least 2 seats, got p={self.p}")
        object.__setattr__(self, "team", frozenset(self.team))
        seats = range(1, self.p + 1)
        if not self.team or not self.team < set(seats):
            raise ValueError(f"team must be a nonempty proper subset of 1..{self.p}")
        if self.first_mover not in seats:
            raise ValueError(f"first_mover {self.first_mover} not in 1..{self.p}")


@dataclass
class SolveResult:
    verdict: bool
    principal_variation: list[Move] = field(default_factory=list)
    nodes_expanded: int = 0
    budget_exhausted: bool = False


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, spec: TeamSpec, budget: int | None, memoize: bool):
        self.spec = spec
        self.budget = budget
        self.memoize = memoize
        self.memo: dict[tuple[tuple[int, ...], int], bool] = {}
        self.nodes = 0

    def value(self, state: GameState, seat: int) -> bool:
        """True iff the team forces the last move from (state, seat to move)."""
        key = (state.counts, seat)
        if self.memoize:
            cached = self.memo.get(key)
            if cached is not None:
                return cached
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded
        team_turn = seat in self.spec.team
        nxt = seat % self.spec.p + 1
        # Team seats pick any winning move; everyone else coordinates
        # against the team, so all their moves must stay winning.
        verdict = not team_turn
        for move in legal_moves(state):
            child = apply_move(state, move)
            outcome = team_turn if is_terminal(child) else self.value(child, nxt)
            if outcome == team_turn:
                verdict = team_turn
                break
        if self.memoize:
            self.memo[key] = verdict
        return verdict

    def principal_variation(self, state: GameState, seat: int) -> list[Move]:
        """One winning line: the team's forced choices against some
        legal resistance (any resistance loses, so the first legal
        adversary reply serves as witness)."""
        pv: list[Move] = []
        while not is_terminal(state):
            nxt = seat % self.spec.p + 1
            chosen = None
            for move in legal_moves(state):
                child = apply_move(state, move)
                if seat not in self.spec.team:
                    chosen = (move, child)
                    break
                if is_terminal(child) or self.value(child, nxt):
                    chosen = (move, child)
                    break
            assert chosen is not None, "winning position must offer a winning move"
            pv.append(chosen[0])
            state = chosen[1]
            seat = nxt
        return pv


def solve_from_state(
    state: GameState,
    seat: int,
    spec: TeamSpec,
    budget: int | None = None,
    memoize: bool = True,
) -> SolveResult:
    """Forced-win verdict with the given seat to move from ``state``.

    On budget exhaustion the result is flagged and the verdict field is
    meaningless (set to False); callers needing a verdict must treat the
    flag as "unknown", never as a win or loss.
    """
    if is_terminal(state):
        raise ValueError("state is terminal; there is no mover to evaluate")
    search = _Search(spec, budget, memoize)
    try:
        verdict = search.value(state, seat)
    except _BudgetExceeded:
        return SolveResult(False, [], search.nodes, budget_exhausted=True)
    pv: list[Move] = []
    if verdict:
        # PV extraction reuses the memo table; it is not budget-metered.
        search.budget = None
        pv = search.principal_variation(state, seat)
    return SolveResult(verdict, pv, search.nodes, budget_exhausted=False)


def solve_team(
    n: int,
    spec: TeamSpec,
    budget: int | None = None,
    memoize: bool = True,
) -> SolveResult:
    """Can the team force the last move in a fresh game on n?"""
    if n < 2:
        raise ValueError(f"solving needs n >= 2, got {n}")
    return solve_from_state(initial_state(n), spec.first_mover, spec, budget, memoize)


def solve_two_player(n: int, budget: int | None = None) -> SolveResult:
    """Two-player verdict for the first mover; False means player 2 wins."""
    return solve_team(n, TeamSpec(2, frozenset({1})), budget)


def enumerate_game_lengths(n: int) -> frozenset[int]:
    """The exact set of total move counts over all complete games on n."""
    if n < 2:
        raise ValueError(f"games need n >= 2, got {n}")
    memo: dict[tuple[int, ...], frozenset[int]] = {}

    def lengths(state: GameState) -> frozenset[int]:
        got = memo.get(state.counts)
        if got is not None:
            return got
        moves = legal_moves(state)
        if not moves:
            out = frozenset({0})
        else:
            out = frozenset(
                1 + rest
                for move in moves
                for rest in lengths(apply_move(state, move))
            )
        memo[state.counts] = out
        return out

    return lengths(initial_state(n))


def combine_count_set(n: int) -> frozenset[int]:
    """All distinct combine-move totals over complete games on n.

    A singleton for every n; returning the set keeps the invariance
    check honest instead of assuming it.
    """
    if n < 2:
        raise ValueError(f"games need n >= 2, got {n}")
    memo: dict[tuple[int, ...], frozenset[int]] = {}

    def counts(state: GameState) -> frozenset[int]:
        got = memo.get(state.counts)
        if got is not None:
            return got
        moves = legal_moves(state)
        if not moves:
            out = frozenset({0})
        else:
            out = frozenset(
                (1 if move.kind == COMBINE else 0) + rest
                for move in moves
                for rest in counts(apply_move(state, move))
            )
        memo[state.counts] = out
        return out

    return counts(initial_state(n))


def verify_combine_invariance(n: int) -> bool:
    """True iff every maximal play path from n has one common combine count."""
    return len(combine_count_set(n)) == 1
