import pytest

from zeckgame.decomposition import greedy_decompose, is_legal, summand_count
from zeckgame.game import (
    COMBINE,
    SPLIT,
    GameState,
    IllegalMoveError,
    Move,
    apply_move,
    initial_state,
    is_terminal,
    legal_moves,
    random_playout,
    terminal_state,
)


def test_initial_states():
    assert initial_state(10).counts == (10, 0, 0)
    assert initial_state(6).counts == (6, 0, 0)
    assert initial_state(1).counts == (1,)
    assert is_terminal(initial_state(1))
    with pytest.raises(ValueError):
        initial_state(0)


def test_legal_moves_examples():
    assert legal_moves(GameState(6, (6, 0, 0))) == [Move(COMBINE, 1)]
    assert legal_moves(GameState(6, (0, 3, 0))) == [Move(SPLIT, 2)]
    assert legal_moves(GameState(6, (1, 2, 0))) == [Move(COMBINE, 2)]


def test_legal_moves_canonical_order():
    # combines ascending first, then splits ascending
    state = GameState(100, (20, 10, 6, 1))
    kinds = [(m.kind, m.index) for m in legal_moves(state)]
    assert kinds == [(COMBINE, 1), (COMBINE, 2), (COMBINE, 3), (SPLIT, 2), (SPLIT, 3)]


def test_apply_combine_1():
    assert apply_move(GameState(10, (10, 0, 0)), Move(COMBINE, 1)).counts == (8, 1, 0)


def test_apply_split_2():
    assert apply_move(GameState(6, (0, 3, 0)), Move(SPLIT, 2)).counts == (1, 0, 1)


def test_apply_split_4_value_conserved():
    # five a_4 = 85 = a_5 + 2 a_3 + a_2
    state = GameState(85, (0, 0, 0, 5, 0))
    after = apply_move(state, Move(SPLIT, 4))
    assert after.counts == (0, 1, 2, 0, 1)
    assert after.value() == 85 == state.value()


def test_illegal_move_rejected_state_unchanged():
    state = GameState(10, (8, 1, 0))
    with pytest.raises(IllegalMoveError):
        apply_move(state, Move(SPLIT, 2))
    assert state.counts == (8, 1, 0)


def test_terminality_examples():
    assert is_terminal(GameState(10, (0, 0, 2)))
    assert not is_terminal(GameState(6, (0, 3, 0)))


def test_terminality_equals_legality_over_reachable_states():
    # walk everything reachable for small n: no moves <=> counts legal
    for n in range(2, 31):
        seen = set()
        stack = [initial_state(n)]
        while stack:
            state = stack.pop()
            if state.counts in seen:
                continue
            seen.add(state.counts)
            moves = legal_moves(state)
            assert (not moves) == is_legal(state.counts)
            for m in moves:
                stack.append(apply_move(state, m))


def test_conservation_and_monovariant_on_playouts():
    for n in (2, 5, 10, 17, 33, 60):
        state = initial_state(n)
        for seed in range(20):
            s = state
            terms = s.total_terms()
            for move in random_playout(s, seed=seed):
                s = apply_move(s, move)
                assert s.value() == n
                assert s.total_terms() < terms
                terms = s.total_terms()
            assert is_terminal(s)


def test_playouts_end_at_unique_decomposition_within_bound():
    for n in range(2, 40):
        target = terminal_state(n)
        bound = n - summand_count(greedy_decompose(n))
        for seed in range(10):
            history = random_playout(initial_state(n), seed=seed)
            assert len(history) <= bound
            s = initial_state(n)
            for move in history:
                s = apply_move(s, move)
            assert s == target


def test_playout_deterministic_per_seed():
    a = random_playout(initial_state(30), seed=42)
    b = random_playout(initial_state(30), seed=42)
    assert a == b


def test_playout_custom_policy():
    # always the last legal move in canonical order
    history = random_playout(initial_state(12), seed=0,
                             policy=lambda s, rng: legal_moves(s)[-1])
    again = random_playout(initial_state(12), seed=5,
                           policy=lambda s, rng: legal_moves(s)[-1])
    assert history == again  # policy ignores the rng, so seed is irrelevant


def test_term_count_deltas():
    # combine(1) and splits shrink the multiset by one; combine(i) by i
    state = GameState(100, (20, 10, 6, 1))
    for move in legal_moves(state):
        delta = state.total_terms() - apply_move(state, move).total_terms()
        if move.kind == COMBINE and move.index >= 2:
            assert delta == move.index
        else:
            assert delta == 1


def test_move_json_round_trip():
    move = Move(SPLIT, 3)
    assert Move.from_json(move.to_json()) == move
    with pytest.raises(ValueError):
        Move.from_json({"kind": "jump", "index": 1})


def test_state_json_shape():
    obj = initial_state(10).to_json()
    assert obj == {"n": 10, "counts": [10, 0, 0], "terminal": False}
