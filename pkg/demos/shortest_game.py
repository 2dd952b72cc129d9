"""Shortest games: the invariant combine count MC(n), its closed formula,
the 0.7757 bound, and the exact matrix algebra behind it all.

Run:  python demos/shortest_game.py
"""

from fractions import Fraction

from zeckgame import term
from zeckgame.move_counts import (
    build_matrix_A,
    build_matrix_B,
    column_sums_from_row2,
    mc,
    mc_of_term,
    mc_ratio_scan,
    ratio_decimal,
)
from zeckgame.solver import combine_count_set, enumerate_game_lengths
from zeckgame.strategies import combine_only_playout

print("Every complete game on n uses the same number of combining moves,")
print("MC(n); splits only pad the game.  Check by exhaustive path walks:")
for n in (6, 10, 14):
    print(f"  n={n:>2}: combine counts over all games {set(combine_count_set(n))}, "
          f"lengths {sorted(enumerate_game_lengths(n))}")
print()

print("A combine-only game hits the minimum.  n = 10:")
print("  " + ", ".join(str(m) for m in combine_only_playout(10)) +
      f"   ({len(combine_only_playout(10))} moves = MC(10) = {mc(10)})")
print()

print("On sequence terms, MC satisfies MC(a_i) = (i-1)MC(a_{i-1}) + MC(a_{i-2}) + 1:")
print("  MC(a_1..a_8) =", ", ".join(str(mc_of_term(i)) for i in range(1, 9)))
print("and for general n it is linear in the decomposition digits:")
print(f"  10 = 2*a_3      -> MC = 2*MC(a_3) = {mc(10)}")
print(f"  33 = a_4+3a_3+1 -> MC = 11 + 3*3 + 0 = {mc(33)}")
print()

print("Scan of MC(n)/n (exact rational comparisons, no floats):")
result = mc_ratio_scan(100_000)
print(f"  max over n <= 1e5: {ratio_decimal(result.max_ratio)} at n = {result.argmax_n}")
print(f"  bound 0.7757 holds: {result.bound_holds}")
r50 = Fraction(mc_of_term(50), term(50))
print(f"  MC(a_i)/a_i creeps toward ~0.6601: at i=50 it is {ratio_decimal(r50)}")
print()

print("Why the formula works: the accounting system A u = delta inverts")
print("to an upper-triangular B whose first row is the sequence itself,")
print("and whose partial column sums reproduce MC(a_j).  k = 5:")
a, b = build_matrix_A(5), build_matrix_B(5)
for row in a:
    print("   A:", " ".join(f"{v:>4}" for v in row))
print()
for row in b:
    print("   B:", " ".join(f"{v:>4}" for v in row))
sums = column_sums_from_row2(b)
print("  column sums (rows 2..j):", sums, "= MC(a_2..a_5)")
