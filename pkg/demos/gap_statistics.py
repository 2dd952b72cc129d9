"""Gap statistics over the intervals I(n) = [a_n, a_{n+1}): almost all
gaps between summands are zero, and the summand count looks Gaussian.

Run:  python demos/gap_statistics.py      (about half a minute: I(9) has ~1.1M integers)
"""

from zeckgame import greedy_decompose
from zeckgame.gaps import gaps_of, interval_gap_stats, moments_of, summand_count_distribution

print("Gaps are index differences between adjacent summands, repeats give 0.")
d = greedy_decompose(33)
print(f"  {d}: summand indices (1, 3, 3, 3, 4) -> gaps {gaps_of(d).gaps}")
print()

print("Exact scans of I(n): the nonzero-gap share shrinks as n grows")
print("(indices repeat ~i/2 times each, so zero gaps dominate).")
print()
print(f"  {'n':>2} {'interval':>9} {'gaps':>9} {'nonzero':>8} {'share':>7}")
for n in range(4, 10):
    st = interval_gap_stats(n)
    print(f"  {n:>2} {st.interval_size:>9} {st.total_gaps:>9} "
          f"{st.nonzero_gaps:>8} {st.proportion_nonzero:>7.4f}")
print()

print("Summand-count distribution over I(n), counted two independent ways")
print("(decompose every integer vs. count coefficient vectors by DP):")
for n in (3, 6, 8):
    enum = summand_count_distribution(n, "enumerate")
    dp = summand_count_distribution(n, "dp")
    print(f"  n={n}: histograms identical: {enum == dp}  ({sum(dp.values())} integers)")
print()

print("Moments of the summand count (skewness drifting toward 0 supports")
print("the Gaussian-limit picture, though nothing here proves it):")
print(f"  {'n':>2} {'mean':>8} {'variance':>9} {'skewness':>9} {'ex.kurt':>8}")
for n in range(4, 13):
    mean, var, skew, kurt = moments_of(summand_count_distribution(n, "dp"))
    print(f"  {n:>2} {mean:>8.3f} {var:>9.3f} {skew:>9.4f} {kurt:>8.4f}")
print()

print("Observed-only: how often does index i appear per integer of I(9)?")
print("(roughly i/2 for middle indices, which is why zero gaps dominate)")
st9 = interval_gap_stats(9)
print(f"  {'i':>2} {'mean copies':>12} {'i/2':>6}")
for i in range(1, 10):
    print(f"  {i:>2} {st9.mean_multiplicity(i):>12.3f} {i / 2:>6.1f}")
