"""Decompositions and the last-move-wins game on a_{i+1} = i*a_i + a_{i-1}.

The package splits into three layers:

* exact integer mathematics: :mod:`zeckgame.sequence`,
  :mod:`zeckgame.decomposition`, :mod:`zeckgame.gaps`,
  :mod:`zeckgame.move_counts`;
* the game itself: :mod:`zeckgame.game` (states and moves),
  :mod:`zeckgame.solver` (exhaustive analysis),
  :mod:`zeckgame.strategies` (executable policies);
* delivery: :mod:`zeckgame.cli` and :mod:`zeckgame.service`.
"""

from .sequence import SequenceTable, index_of_floor, term, terms
from .decomposition import (
    Decomposition,
    enumerate_legal,
    greedy_decompose,
    is_legal,
    summand_count,
    value_of,
)
from .game import (
    GameState,
    IllegalMoveError,
    Move,
    apply_move,
    initial_state,
    is_terminal,
    legal_moves,
    random_playout,
)

__all__ = [
    "SequenceTable",
    "index_of_floor",
    "term",
    "terms",
    "Decomposition",
    "enumerate_legal",
    "greedy_decompose",
    "is_legal",
    "summand_count",
    "value_of",
    "GameState",
    "IllegalMoveError",
    "Move",
    "apply_move",
    "initial_state",
    "is_terminal",
    "legal_moves",
    "random_playout",
]

__version__ = "0.1.0"
