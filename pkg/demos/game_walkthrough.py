"""The game itself: moves, finiteness, where it ends, and who wins.

Run:  python demos/game_walkthrough.py
"""

from zeckgame import apply_move, initial_state, legal_moves, random_playout
from zeckgame.game import terminal_state
from zeckgame.solver import TeamSpec, enumerate_game_lengths, solve_team, solve_two_player

print("A game on n starts as n ones and rewrites the multiset with the")
print("recurrence: combines build bigger terms, splits break up hoards.")
print()

print("One random game on n = 10 (counts are copies of 1, 2, 5):")
state = initial_state(10)
print(f"  start {state.counts}")
for move in random_playout(state, seed=4):
    state = apply_move(state, move)
    print(f"  {str(move):>3}  -> {state.counts}")
print(f"  no moves remain: {legal_moves(state) == []}")
print(f"  every game on 10 ends here, at the decomposition {terminal_state(10).counts}")
print()

print("Game lengths are not fixed, but their parity menu is known:")
for n in (6, 10, 17):
    print(f"  achievable lengths on n={n}: {sorted(enumerate_game_lengths(n))}")
print("  (3 vs 4 moves on n=6: combine-combine-combine vs three combines + a split)")
print()

print("Whoever moves last wins.  Exhaustive solving, two players:")
print("  n:        " + " ".join(f"{n:>2}" for n in range(2, 21)))
print("  winner:   " + " ".join(f"{1 if solve_two_player(n).verdict else 2:>2}"
                                for n in range(2, 21)))
print()

print("Three players, worst-case coalitions: seat 2 never has a forced win")
print("for n in 5..12 while seat 3 wins outright at n=5 (the opening is forced):")
for n in range(5, 13):
    v2 = solve_team(n, TeamSpec(3, frozenset({2}))).verdict
    v3 = solve_team(n, TeamSpec(3, frozenset({3}))).verdict
    print(f"  n={n:>2}: seat2 {str(v2):<5} seat3 {str(v3):<5}")
print()

print("Four players at n=16: nobody can force the last move:")
verdicts = [solve_team(16, TeamSpec(4, frozenset({m}))).verdict for m in range(1, 5)]
print(f"  seats 1..4: {verdicts}")
