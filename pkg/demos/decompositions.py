"""Tour of the number system: the sequence, greedy decompositions, and
the brute-force uniqueness check.

Run:  python demos/decompositions.py
"""

from zeckgame import enumerate_legal, greedy_decompose, index_of_floor, term, terms

print("The sequence starts a_1 = 1, a_2 = 2 and grows by a_{i+1} = i*a_i + a_{i-1}:")
print(" ", ", ".join(str(t) for t in terms(9)), "...")
print("Growth is faster than factorial; a_21 already needs more than 64 bits:")
print(f"  a_21 = {term(21)}")
print()

print("Every positive integer has exactly one legal decomposition")
print("(coefficients s_i <= i, and s_i = i forces s_{i-1} = 0).")
print("The greedy algorithm finds it.  Walking x = 33:")
x = 33
while x:
    n = index_of_floor(x)
    s = x // term(n)
    print(f"  largest term <= {x:2d} is a_{n} = {term(n):2d}; "
          f"take floor({x}/{term(n)}) = {s} copies, leaving {x - s * term(n)}")
    x -= s * term(n)
print("  result:", greedy_decompose(33))
print()

print("Note a_2 was skipped: the coefficient of a_3 is 3 (saturated), so the")
print("legality rule already forces the a_2 coefficient to zero.")
print()

print("Cross-check by brute force: enumerate every legal coefficient vector")
print("with top index <= 4 and look at the multiset of values.")
values = sorted(d.value for d in enumerate_legal(4))
print(f"  {len(values)} vectors; values are exactly 0..{values[-1]} "
      f"with no repeats: {values == list(range(73))}")
print("  (0..a_5 - 1 = 0..72, i.e. existence and uniqueness at desk scale)")
print()

print("The greedy result matches the enumeration on every value:")
by_value = {d.value: d.coeffs for d in enumerate_legal(4)}
agree = all(by_value[x] == greedy_decompose(x).coeffs for x in range(1, 73))
print(f"  greedy == oracle on [1, 72]: {agree}")
