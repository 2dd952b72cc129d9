"""Gap and summand-count statistics over the intervals I(n) = [a_n, a_{n+1}).

Listing a decomposition's summands with multiplicity in increasing index
order, a *gap* is the index difference between adjacent summands; two
identical summands give a gap of length zero.  As n grows, almost all
gaps are zero (indices repeat roughly i/2 times each), which these
exhaustive interval scans make visible numerically.

The summand-count distribution over I(n) is computed two independent
ways: by decomposing every integer in the interval, and by a dynamic
program that counts legal coefficient vectors with a saturation flag and
never touches an actual integer.  Exact agreement of the two is one of
the stronger self-checks in the package.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import sequence
from .decomposition import Decomposition, summand_count


@dataclass(frozen=True)
class GapProfile:
    """Gaps of one decomposition, in summand order (low index to high)."""

    gaps: tuple[int, ...]

    @property
    def nonzero(self) -> int:
        return sum(1 for g in self.gaps if g > 0)


def gaps_of(d: Decomposition) -> GapProfile:
    """Gap profile of a nonempty decomposition.

    A decomposition with t summands (with multiplicity) has exactly
    t - 1 gaps: s_i copies of a_i contribute s_i - 1 zero gaps, and each
    pair of adjacent distinct indices contributes their difference.
    """
    if summand_count(d) == 0:
        raise ValueError("the empty decomposition has no gap profile")
    gaps: list[int] = []
    prev = None
    for i, s in enumerate(d.coeffs, start=1):
        if s == 0:
            continue
        if prev is not None:
            gaps.append(i - prev)
        gaps.extend([0] * (s - 1))
        prev = i
    return GapProfile(tuple(gaps))


@dataclass
class IntervalStats:
    """Aggregated gap/summand statistics for integers of one interval I(n).

    ``processed`` counts the integers actually folded in (the whole
    interval in exact mode, the sample size otherwise); both histograms
    total to it.  Merging is plain counter addition, so partial scans of
    disjoint sub-ranges can be combined in any order with identical
    results.
    """

    n: int
    interval_size: int
    processed: int = 0
    total_gaps: int = 0
    nonzero_gaps: int = 0
    gap_histogram: dict[int, int] = field(default_factory=dict)
    summand_count_histogram: dict[int, int] = field(default_factory=dict)
    # total copies of a_i used across the scanned integers, keyed by i;
    # purely observational (index i tends to appear about i/2 times)
    coefficient_totals: dict[int, int] = field(default_factory=dict)

    @property
    def proportion_nonzero(self) -> float:
        return self.nonzero_gaps / self.total_gaps if self.total_gaps else 0.0

    def mean_multiplicity(self, index: int) -> float:
        """Average number of copies of a_index per scanned integer."""
        if self.processed == 0:
            return float("nan")
        return self.coefficient_totals.get(index, 0) / self.processed

    @property
    def moments(self) -> tuple[float, float, float, float]:
        """(mean, variance, skewness, excess kurtosis) of the summand count."""
        return moments_of(self.summand_count_histogram)

    def merge(self, other: "IntervalStats") -> "IntervalStats":
        if other.n != self.n:
            raise ValueError(f"cannot merge stats for n={self.n} and n={other.n}")
        out = IntervalStats(self.n, self.interval_size)
        out.processed = self.processed + other.processed
        out.total_gaps = self.total_gaps + other.total_gaps
        out.nonzero_gaps = self.nonzero_gaps + other.nonzero_gaps
        for src in (self.gap_histogram, other.gap_histogram):
            for k, v in src.items():
                out.gap_histogram[k] = out.gap_histogram.get(k, 0) + v
        for src in (self.summand_count_histogram, other.summand_count_histogram):
            for k, v in src.items():
                out.summand_count_histogram[k] = (
                    out.summand_count_histogram.get(k, 0) + v
                )
        for src in (self.coefficient_totals, other.coefficient_totals):
            for k, v in src.items():
                out.coefficient_totals[k] = out.coefficient_totals.get(k, 0) + v
        return out

    def csv_row(self) -> list[str]:
        mean, var, skew, kurt = self.moments
        return [
            str(self.n),
            str(self.interval_size),
            str(self.total_gaps),
            str(self.nonzero_gaps),
            repr(self.proportion_nonzero),
            repr(mean),
            repr(var),
            repr(skew),
            repr(kurt),
        ]


CSV_HEADER = [
    "n",
    "interval_size",
    "total_gaps",
    "nonzero_gaps",
    "proportion_nonzero",
    "mean",
    "variance",
    "skewness",
    "kurtosis",
]


def moments_of(histogram: dict[int, int]) -> tuple[float, float, float, float]:
    """Population moments of an exact integer histogram.

    The histogram itself is exact; only this final step is floating
    point.  Returns NaN skewness/kurtosis for a degenerate distribution.
    """
    total = sum(histogram.values())
    if total == 0:
        return (float("nan"),) * 4
    mean = sum(k * v for k, v in histogram.items()) / total
    m2 = m3 = m4 = 0.0
    for k, v in histogram.items():
        d = k - mean
        m2 += v * d * d
        m3 += v * d * d * d
        m4 += v * d * d * d * d
    m2 /= total
    m3 /= total
    m4 /= total
    if m2 == 0.0:
        return (mean, 0.0, float("nan"), float("nan"))
    return (mean, m2, m3 / m2**1.5, m4 / (m2 * m2) - 3.0)


def _fold_value(m: int, terms_desc: list[tuple[int, int]], stats: IntervalStats) -> None:
    """Fold one integer's greedy decomposition into the running stats.

    Equivalent to gaps_of(greedy_decompose(m)) plus summand_count, but
    works straight off the coefficient walk: s_i copies of a_i give
    s_i - 1 zero gaps, adjacent distinct indices i > j give one gap of
    length i - j.  tests/test_gaps.py checks this against the literal
    composition of the public operations.
    """
    rem = m
    nz = []  # (index, coeff) pairs, descending index
    for i, a in terms_desc:
        if a <= rem:
            s, rem = divmod(rem, a)
            nz.append((i, s))
            if rem == 0:
                break
    ghist = stats.gap_histogram
    ctot = stats.coefficient_totals
    zero = 0
    count = 0
    prev_i = None
    for i, s in nz:
        count += s
        zero += s - 1
        ctot[i] = ctot.get(i, 0) + s
        if prev_i is not None:
            d = prev_i - i
            ghist[d] = ghist.get(d, 0) + 1
        prev_i = i
    if zero:
        ghist[0] = ghist.get(0, 0) + zero
    stats.total_gaps += zero + len(nz) - 1
    stats.nonzero_gaps += len(nz) - 1
    shist = stats.summand_count_histogram
    shist[count] = shist.get(count, 0) + 1
    stats.processed += 1


def _scan_range(n: int, lo: int, hi: int) -> IntervalStats:
    """Exact stats over the integers [lo, hi) within I(n)."""
    a_n = sequence.term(n)
    a_next = sequence.term(n + 1)
    stats = IntervalStats(n, a_next - a_n)
    terms_desc = [(i, sequence.term(i)) for i in range(n, 0, -1)]
    for m in range(lo, hi):
        _fold_value(m, terms_desc, stats)
    return stats


def interval_gap_stats(
    n: int,
    sample: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> IntervalStats:
    """Gap/summand statistics for I(n) = [a_n, a_{n+1}).

    Exhaustive by default (feasible through n = 9, interval size about
    1.1M); pass ``sample`` for a seeded uniform sample of the interval.
    ``threads`` > 1 splits an exhaustive scan into chunks across
    processes; the merged result is identical regardless of the split.
    """
    if n < 2:
        raise ValueError(f"interval statistics start at n = 2, got {n}")
    a_n = sequence.term(n)
    a_next = sequence.term(n + 1)
    if sample is not None:
        if sample < 1:
            raise ValueError(f"sample count must be >= 1, got {sample}")
        rng = random.Random(seed)
        stats = IntervalStats(n, a_next - a_n)
        terms_desc = [(i, sequence.term(i)) for i in range(n, 0, -1)]
        for _ in range(sample):
            _fold_value(rng.randrange(a_n, a_next), terms_desc, stats)
        return stats
    if threads <= 1:
        return _scan_range(n, a_n, a_next)
    bounds = [a_n + (a_next - a_n) * j // threads for j in range(threads + 1)]
    chunks = [(n, bounds[j], bounds[j + 1]) for j in range(threads)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(_scan_range_star, chunks))
    out = parts[0]
    for part in parts[1:]:
        out = out.merge(part)
    return out


def _scan_range_star(args: tuple[int, int, int]) -> IntervalStats:
    return _scan_range(*args)


def summand_count_distribution(n: int, mode: str = "enumerate") -> dict[int, int]:
    """Frequency of each total summand count over I(n).

    ``enumerate`` decomposes every integer in the interval; ``dp`` counts
    legal coefficient vectors with s_n >= 1 directly (choices walk from
    the top index down, carrying the saturation flag), so the two
    computations share no code and should agree bit for bit.
    """
    if n < 2:
        raise ValueError(f"interval statistics start at n = 2, got {n}")
    if mode == "enumerate":
        return dict(
            sorted(_scan_range(n, sequence.term(n), sequence.term(n + 1))
                   .summand_count_histogram.items())
        )
    if mode != "dp":
        raise ValueError(f"mode must be 'enumerate' or 'dp', got {mode!r}")
    # g_free / g_forced are the summand-count generating functions over
    # coefficient choices s_i..s_1, with and without s_i forced to zero.
    g_free: dict[int, int] = {0: 1}
    g_forced: dict[int, int] = {0: 1}
    for i in range(1, n):
        new_forced = dict(g_free)
        new_free: dict[int, int] = {}
        for cnt, ways in g_forced.items():  # s_i = i saturates the level below
            new_free[cnt + i] = new_free.get(cnt + i, 0) + ways
        for s in range(i):
            for cnt, ways in g_free.items():
                new_free[cnt + s] = new_free.get(cnt + s, 0) + ways
        g_free, g_forced = new_free, new_forced
    out: dict[int, int] = {}
    for s in range(1, n + 1):
        src = g_forced if s == n else g_free
        for cnt, ways in src.items():
            out[cnt + s] = out.get(cnt + s, 0) + ways
    return dict(sorted(out.items()))
