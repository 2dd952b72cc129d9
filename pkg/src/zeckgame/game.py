"""Game states and moves for the last-move-wins game on the recurrence.

A game on n starts from n copies of a_1 = 1.  Each turn rewrites the
multiset using the recurrence a_{i+1} = i*a_i + a_{i-1}:

* combine, index 1:   two 1's          -> one a_2
* combine, index i>1: i a_i's + one a_{i-1} -> one a_{i+1}
* split, index 2:     three a_2's      -> one a_1 + one a_3
* split, index i>2:   (i+1) a_i's      -> one a_{i+1} + (i-2) a_{i-1} + one a_{i-2}

(the split identity: (i+1)a_i = a_{i+1} + (i-2)a_{i-1} + a_{i-2}).

Every move strictly decreases the total number of terms, so play is
finite and ends exactly at the unique legal decomposition of n.  States
are immutable; ``apply_move`` returns a fresh state, which makes them
safe to hash into memo tables and share across searches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import sequence
from .decomposition import greedy_decompose

COMBINE = "combine"
SPLIT = "split"


class IllegalMoveError(ValueError):
    """Raised when a move's precondition fails on the given state."""


@dataclass(frozen=True)
class Move:
    kind: str  # COMBINE or SPLIT
    index: int

    def __str__(self) -> str:
        return f"{'C' if self.kind == COMBINE else 'S'}{self.index}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index}

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        kind = obj.get("kind")
        index = obj.get("index")
        if kind not in (COMBINE, SPLIT) or not isinstance(index, int):
            raise ValueError(f"malformed move object: {obj!r}")
        return cls(kind, index)


@dataclass(frozen=True)
class GameState:
    """Multiset of sequence terms held as per-index counts.

    ``counts[i-1]`` is the number of copies of a_i.  The vector length is
    fixed at creation to K = index_of_floor(n): conservation of the total
    value n means no term above a_K can ever appear, so states of one
    game always hash and compare on the same shape.
    """

    n: int
    counts: tuple[int, ...]

    def total_terms(self) -> int:
        return sum(self.counts)

    def value(self) -> int:
        """Exact multiset value; equals n for every reachable state."""
        return sum(c * a for c, a in zip(self.counts, sequence.terms(len(self.counts))))

    def to_json(self) -> dict:
        return {"n": self.n, "counts": list(self.counts), "terminal": is_terminal(self)}


def initial_state(n: int) -> GameState:
    """The starting position {a_1^n}: n ones."""
    if n < 1:
        raise ValueError(f"game requires n >= 1, got {n}")
    k = sequence.index_of_floor(n)
    return GameState(n, (n,) + (0,) * (k - 1))


def _precondition(state: GameState, move: Move) -> Optional[str]:
    """None when the move is legal, else a human-readable reason."""
    c = state.counts
    k = len(c)
    i = move.index
    if move.kind == COMBINE:
        if not 1 <= i <= k - 1:
            return f"combine index {i} out of range 1..{k - 1}"
        if i == 1:
            if c[0] < 2:
                return "precondition c_1 >= 2 fails"
        else:
            if c[i - 1] < i:
                return f"precondition c_{i} >= {i} fails"
            if c[i - 2] < 1:
                return f"precondition c_{i - 1} >= 1 fails"
    elif move.kind == SPLIT:
        if not 2 <= i <= k - 1:
            return f"split index {i} out of range 2..{k - 1}"
        need = 3 if i == 2 else i + 1
        if c[i - 1] < need:
            return f"precondition c_{i} >= {need} fails"
    else:
        return f"unknown move kind {move.kind!r}"
    return None


def is_legal_move(state: GameState, move: Move) -> bool:
    return _precondition(state, move) is None


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves, in the canonical order C_1..C_{K-1}, S_2..S_{K-1}.

    The order is part of the contract: searches and bot policies rely on
    it for reproducible traces.
    """
    c = state.counts
    k = len(c)
    moves = []
    if k >= 2 and c[0] >= 2:
        moves.append(Move(COMBINE, 1))
    for i in range(2, k):
        if c[i - 1] >= i and c[i - 2] >= 1:
            moves.append(Move(COMBINE, i))
    for i in range(2, k):
        need = 3 if i == 2 else i + 1
        if c[i - 1] >= need:
            moves.append(Move(SPLIT, i))
    return moves


def is_terminal(state: GameState) -> bool:
    """No move applies; equivalently the counts form a legal decomposition."""
    c = state.counts
    k = len(c)
    if k >= 2 and c[0] >= 2:
        return False
    for i in range(2, k):
        ci = c[i - 1]
        if ci >= i and c[i - 2] >= 1:
            return False
        if ci >= (3 if i == 2 else i + 1):
            return False
    return True


def apply_move(state: GameState, move: Move) -> GameState:
    """Return the state after the move; the input state is untouched.

    Raises :class:`IllegalMoveError` (carrying the failed precondition)
    when the move does not apply.
    """
    reason = _precondition(state, move)
    if reason is not None:
        raise IllegalMoveError(reason)
    c = list(state.counts)
    i = move.index
    if move.kind == COMBINE:
        if i == 1:
            c[0] -= 2
            c[1] += 1
        else:
            c[i - 1] -= i
            c[i - 2] -= 1
            c[i] += 1
    else:  # SPLIT
        if i == 2:
            c[1] -= 3
            c[0] += 1
            c[2] += 1
        else:
            c[i - 1] -= i + 1
            c[i] += 1
            c[i - 2] += i - 2
            c[i - 3] += 1
    return GameState(state.n, tuple(c))


def random_playout(
    state: GameState,
    seed: int = 0,
    policy: Optional[Callable[[GameState, random.Random], Move]] = None,
) -> list[Move]:
    """Play legal moves until terminal; returns the move history.

    The default policy draws uniformly from ``legal_moves``.  A custom
    policy receives (state, rng) and must return a legal move.
    Deterministic for a fixed seed and policy.
    """
    rng = random.Random(seed)
    history = []
    while not is_terminal(state):
        if policy is None:
            move = rng.choice(legal_moves(state))
        else:
            move = policy(state, rng)
        state = apply_move(state, move)
        history.append(move)
    return history


def terminal_state(n: int) -> GameState:
    """Where every game on n ends: the unique legal decomposition of n."""
    # the greedy top coefficient is always >= 1, so the vector length is
    # exactly index_of_floor(n), the game's fixed K
    return GameState(n, greedy_decompose(n).coeffs)
