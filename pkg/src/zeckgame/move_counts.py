"""The combine-move count MC(n): recurrence, closed formula, bound scan,
and the exact matrix identities behind the formula.

Every complete game on n contains the same number of combining moves,
MC(n), and a combine-only game realizes it as the shortest possible
game.  On sequence terms MC satisfies

    MC(a_1) = 0,  MC(a_2) = 1,
    MC(a_i) = (i-1) MC(a_{i-1}) + MC(a_{i-2}) + 1    (i >= 3),

and for general n with legal decomposition n = sum delta_i a_i,

    MC(n) = delta_2 MC(a_2) + delta_3 MC(a_3) + ... + delta_k MC(a_k).

The formula drops out of inverting the move-accounting system A u = delta
(u = (n, MC_1, ..., MC_{k-1})): the inverse B is upper triangular with
the sequence itself as its first row, and its column sums from row 2
down reproduce the MC(a_j) values.  Everything here is exact integer or
rational arithmetic; floats appear only in reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import sequence
from .decomposition import greedy_decompose

Matrix = list[list[int]]

_MC: list[int] = [0, 1]  # MC(a_1), MC(a_2), extended on demand


def mc_of_term(i: int) -> int:
    """MC(a_i) from the recurrence, exact."""
    if i < 1:
        raise ValueError(f"term index must be >= 1, got {i}")
    while len(_MC) < i:
        j = len(_MC) + 1  # computing MC(a_j)
        _MC.append((j - 1) * _MC[-1] + _MC[-2] + 1)
    return _MC[i - 1]


def mc(n: int) -> int:
    """Combine-move count of any complete game on n (= shortest game length)."""
    if n < 1:
        raise ValueError(f"mc requires n >= 1, got {n}")
    coeffs = greedy_decompose(n).coeffs
    # delta_1 contributes MC(a_1) = 0; kept in the loop for uniformity.
    return sum(s * mc_of_term(i) for i, s in enumerate(coeffs, start=1) if s)


_BOUND = Fraction(7757, 10000)


@dataclass
class ScanResult:
    """Outcome of an MC(n)/n bound scan."""

    limit: int
    max_ratio: Fraction
    argmax_n: int
    bound_holds: bool  # max_ratio < 7757/10000, compared exactly
    term_ratios: list[tuple[int, Fraction]]  # (i, MC(a_i)/a_i)


def mc_ratio_scan(limit: int, series_len: int = 50) -> ScanResult:
    """Scan MC(n)/n for all n <= limit against the 0.7757 bound.

    Ratios are compared by cross-multiplication (the bound is a hard
    inequality, so no floats are involved in the verdict).  Also emits
    MC(a_i)/a_i for i = 1..series_len to observe the empirical limit
    near 0.6601.
    """
    if limit < 2:
        raise ValueError(f"scan limit must be >= 2, got {limit}")
    k_max = sequence.index_of_floor(limit)
    terms_desc = [(i, sequence.term(i)) for i in range(k_max, 0, -1)]
    mc_by_index = [0] + [mc_of_term(i) for i in range(1, k_max + 1)]
    best_num, best_den, best_n = 0, 1, 1
    holds = True
    for n in range(1, limit + 1):
        rem = n
        total = 0
        for i, a in terms_desc:
            if a <= rem:
                s, rem = divmod(rem, a)
                total += s * mc_by_index[i]
                if rem == 0:
                    break
        if total * best_den > best_num * n:
            best_num, best_den, best_n = total, n, n
        if total * 10000 >= 7757 * n:
            holds = False
    series = [
        (i, Fraction(mc_of_term(i), sequence.term(i)))
        for i in range(1, series_len + 1)
    ]
    return ScanResult(limit, Fraction(best_num, best_den), best_n, holds, series)


def ratio_decimal(r: Fraction, digits: int = 10) -> str:
    """Decimal rendering of a non-negative rational, truncated, exact digits."""
    whole, rem = divmod(r.numerator, r.denominator)
    frac = rem * 10**digits // r.denominator
    return f"{whole}.{frac:0{digits}d}"


def build_matrix_A(k: int) -> Matrix:
    """k x k coefficient matrix of the combine-accounting system A u = delta.

    Row 1 reads delta_1 = n - 2*MC_1 - MC_2; row i >= 2 reads
    delta_i = MC_{i-1} - i*MC_i - MC_{i+1}, with columns beyond k
    dropped (MC_k = MC_{k+1} = 0).
    """
    if k < 3:
        raise ValueError(f"matrix size must be >= 3, got {k}")
    a = [[0] * k for _ in range(k)]
    a[0][0], a[0][1], a[0][2] = 1, -2, -1
    for i in range(2, k + 1):
        a[i - 1][i - 1] = 1
        if i < k:
            a[i - 1][i] = -i
        if i + 1 < k:
            a[i - 1][i + 1] = -1
    return a


def build_matrix_B(k: int) -> Matrix:
    """The inverse of A: upper triangular, first row the sequence terms.

    Row 1 is (a_1, ..., a_k); row i >= 2 starts 1, i on the diagonal and
    first superdiagonal.  All rows continue with the column recurrence
    B[i][j] = (j-1) B[i][j-1] + B[i][j-2].
    """
    if k < 3:
        raise ValueError(f"matrix size must be >= 3, got {k}")
    b = [[0] * k for _ in range(k)]
    b[0] = list(sequence.terms(k))
    for i in range(2, k + 1):
        b[i - 1][i - 1] = 1
        if i < k:
            b[i - 1][i] = i
        for j in range(i + 2, k + 1):
            b[i - 1][j - 1] = (j - 1) * b[i - 1][j - 2] + b[i - 1][j - 3]
    return b


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    rows, inner, cols = len(x), len(y), len(y[0])
    assert len(x[0]) == inner
    return [
        [sum(x[r][t] * y[t][c] for t in range(inner)) for c in range(cols)]
        for r in range(rows)
    ]


def identity(k: int) -> Matrix:
    return [[int(r == c) for c in range(k)] for r in range(k)]


def column_sums_from_row2(b: Matrix) -> list[int]:
    """sum_{i=2..j} B[i][j] for each column j >= 2 (1-indexed result list)."""
    k = len(b)
    return [sum(b[i - 1][j - 1] for i in range(2, j + 1)) for j in range(2, k + 1)]


def verify_inverse_identity(k: int) -> bool:
    """Exact check that A(k) B(k) = I and column sums reproduce MC(a_j)."""
    a, b = build_matrix_A(k), build_matrix_B(k)
    if mat_mul(a, b) != identity(k):
        return False
    sums = column_sums_from_row2(b)
    return all(sums[j - 2] == mc_of_term(j) for j in range(2, k + 1))


def move_tallies(history) -> tuple[dict[int, int], dict[int, int]]:
    """Per-index combine and split counts of a move history."""
    combines: dict[int, int] = {}
    splits: dict[int, int] = {}
    for move in history:
        tally = combines if move.kind == "combine" else splits
        tally[move.index] = tally.get(move.index, 0) + 1
    return combines, splits


def verify_move_accounting(n: int, history) -> bool:
    """Check a complete game's tallies against the accounting system.

    Writing MC_i / MS_i for the number of combines / splits at index i,
    the final digit of each a_i must satisfy

        delta_1 = n - 2 MC_1 - MC_2 + MS_2 + MS_3
        delta_2 = MC_1 - 2 MC_2 - MC_3 - 3 MS_2 + MS_3 + MS_4
        delta_i = MC_{i-1} - i MC_i - MC_{i+1}
                  + MS_{i-1} - (i+1) MS_i + (i-1) MS_{i+1} + MS_{i+2}

    for 3 <= i <= k.  Any complete game on n, however played, satisfies
    all of them; summing the solved system is where the MC(n) formula
    comes from.
    """
    combines, splits = move_tallies(history)
    comb = combines.get
    spl = splits.get
    k = sequence.index_of_floor(n)
    coeffs = greedy_decompose(n).coeffs
    delta = list(coeffs) + [0] * (k - len(coeffs))
    if delta[0] != n - 2 * comb(1, 0) - comb(2, 0) + spl(2, 0) + spl(3, 0):
        return False
    if k >= 2 and delta[1] != (comb(1, 0) - 2 * comb(2, 0) - comb(3, 0)
                               - 3 * spl(2, 0) + spl(3, 0) + spl(4, 0)):
        return False
    for i in range(3, k + 1):
        expected = (
            comb(i - 1, 0) - i * comb(i, 0) - comb(i + 1, 0)
            + spl(i - 1, 0) - (i + 1) * spl(i, 0)
            + (i - 1) * spl(i + 1, 0) + spl(i + 2, 0)
        )
        if delta[i - 1] != expected:
            return False
    return True
