"""Acceptance suite: one test per release criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria execute.  Stated runtime ceilings are asserted alongside the
mathematical content; everything runs single-threaded.
"""

import random
import time
from fractions import Fraction

from zeckgame.decomposition import enumerate_legal, greedy_decompose, summand_count
from zeckgame.game import apply_move, initial_state, is_terminal, legal_moves, terminal_state
from zeckgame.gaps import interval_gap_stats, moments_of, summand_count_distribution
from zeckgame.move_counts import mc, mc_of_term, mc_ratio_scan, verify_inverse_identity
from zeckgame.sequence import index_of_floor, term
from zeckgame.solver import (
    TeamSpec,
    combine_count_set,
    enumerate_game_lengths,
    solve_team,
)
from zeckgame.strategies import verify_no_split_reachable


def report(ok: bool, label: str, detail: str = "") -> None:
    tail = f"  ({detail})" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'} | {label}{tail}", flush=True)
    assert ok, label


def test_c01_uniqueness_and_greedy_to_20000():
    start = time.monotonic()
    limit = 20000
    top = index_of_floor(limit)  # 8: every decomposition of x <= 20000 fits
    seen: dict[int, tuple[int, ...]] = {}
    duplicates = 0
    for d in enumerate_legal(top):
        if 1 <= d.value <= limit:
            if d.value in seen:
                duplicates += 1
            seen[d.value] = d.coeffs
    complete = len(seen) == limit
    greedy_match = all(seen[x] == greedy_decompose(x).coeffs
                       for x in range(1, limit + 1))
    elapsed = time.monotonic() - start
    report(
        duplicates == 0 and complete and greedy_match and elapsed < 60,
        "uniqueness + greedy agreement on [1, 20000]",
        f"{elapsed:.1f}s, dups={duplicates}, covered={len(seen)}",
    )


def test_c02_max_decomposable_value():
    ok = all(
        max(d.value for d in enumerate_legal(n)) == term(n + 1) - 1
        for n in range(1, 9)
    )
    report(ok, "max value over indices <= n is a_{n+1} - 1, n in 1..8")


def test_c03_worked_example_33():
    got = greedy_decompose(33).coeffs
    report(got == (1, 0, 3, 1), "decompose(33) = (s1,s2,s3,s4) = (1,0,3,1)",
           f"got {got}")


def test_c04_gap_trend_exact_4_to_9():
    start = time.monotonic()
    props = [interval_gap_stats(n).proportion_nonzero for n in range(4, 10)]
    elapsed = time.monotonic() - start
    decreasing = all(a > b for a, b in zip(props, props[1:]))
    report(
        decreasing and elapsed < 300,
        "nonzero-gap proportion strictly decreasing over I(4)..I(9)",
        f"{elapsed:.1f}s, props=" + ", ".join(f"{p:.4f}" for p in props),
    )


def test_c05_gaussianity_support():
    agree = all(
        summand_count_distribution(n, "enumerate") == summand_count_distribution(n, "dp")
        for n in range(2, 9)
    )
    m5 = moments_of(summand_count_distribution(5, "dp"))
    m9 = moments_of(summand_count_distribution(9, "dp"))
    print(f"      moments n=5: mean={m5[0]:.4f} var={m5[1]:.4f} "
          f"skew={m5[2]:.4f} exkurt={m5[3]:.4f}")
    print(f"      moments n=9: mean={m9[0]:.4f} var={m9[1]:.4f} "
          f"skew={m9[2]:.4f} exkurt={m9[3]:.4f}")
    report(
        agree and abs(m9[2]) < abs(m5[2]),
        "summand-count histograms: enumerate == dp on I(2)..I(8); "
        "|skew(9)| < |skew(5)|",
        f"|{m9[2]:.4f}| < |{m5[2]:.4f}|",
    )


def test_c06_playouts_terminate_at_decomposition():
    start = time.monotonic()
    ok = True
    for n in range(2, 61):
        target = terminal_state(n)
        bound = n - summand_count(greedy_decompose(n))
        for seed in range(1000):
            rng = random.Random(seed * 61 + n)
            state = initial_state(n)
            moves = 0
            while not is_terminal(state):
                state = apply_move(state, rng.choice(legal_moves(state)))
                moves += 1
                if state.value() != n:  # conservation after every move
                    ok = False
                    break
            if not (ok and moves <= bound and state == target):
                ok = False
                break
        if not ok:
            break
    elapsed = time.monotonic() - start
    report(ok, "1000 playouts per n in 2..60 end at the decomposition "
               "within n - LZ(n) moves, value conserved", f"{elapsed:.1f}s")


def test_c07_parity_theorem():
    ok6 = enumerate_game_lengths(6) == frozenset({3, 4})
    both = all(
        any(v % 2 == 0 for v in enumerate_game_lengths(n))
        and any(v % 2 == 1 for v in enumerate_game_lengths(n))
        for n in range(6, 21)
    )
    report(ok6 and both,
           "lengths(6) = {3,4}; odd and even lengths for every n in 6..20")


def test_c08_mc_table():
    got = tuple(mc_of_term(i) for i in range(1, 9))
    report(got == (0, 1, 3, 11, 48, 252, 1561, 11180),
           "MC(a_1..a_8) = (0, 1, 3, 11, 48, 252, 1561, 11180)", f"got {got}")


def test_c09_combine_invariance_and_shortest_game():
    start = time.monotonic()
    ok = True
    for n in range(2, 15):
        combines = combine_count_set(n)
        if len(combines) != 1:
            ok = False
            break
        expected = mc(n)
        if combines != frozenset({expected}):
            ok = False
            break
        if min(enumerate_game_lengths(n)) != expected:
            ok = False
            break
    elapsed = time.monotonic() - start
    report(ok and elapsed < 600,
           "every game on n in 2..14 has combine count mc(n) = shortest length",
           f"{elapsed:.1f}s")


def test_c10_bound_scan():
    start = time.monotonic()
    result = mc_ratio_scan(100_000, series_len=50)
    ratio_50 = Fraction(mc_of_term(50), term(50))
    in_window = Fraction(6571, 10000) < ratio_50 < Fraction(6631, 10000)
    elapsed = time.monotonic() - start
    report(
        result.bound_holds and in_window,
        "MC(n)/n < 7757/10000 for n <= 1e5; MC(a_50)/a_50 in (0.6571, 0.6631)",
        f"{elapsed:.1f}s, max={float(result.max_ratio):.6f} at n={result.argmax_n}, "
        f"a_50 ratio={float(ratio_50):.6f}",
    )


def test_c11_matrix_lemma():
    ok = all(verify_inverse_identity(k) for k in range(3, 13))
    report(ok, "A(k)B(k) = I and column sums = MC(a_j), k in 3..12 (exact)")


def test_c12_three_player_verdicts():
    ok_t7 = all(
        not solve_team(n, TeamSpec(3, frozenset({2}))).verdict
        for n in range(5, 13)
    )
    ok_5 = solve_team(5, TeamSpec(3, frozenset({3}))).verdict
    report(ok_t7 and ok_5,
           "p=3: seat 2 never forces the win for n in 5..12; seat 3 does at n=5")


def test_c13_four_player_probe_budgeted():
    ok = True
    details = []
    for m in range(1, 5):
        result = solve_team(16, TeamSpec(4, frozenset({m})), budget=1_000_000)
        if result.budget_exhausted:
            details.append(f"seat {m}: budget exhausted (verdict withheld)")
            if result.verdict:  # a positive claim under exhaustion is forbidden
                ok = False
        else:
            details.append(f"seat {m}: {result.verdict}")
            if result.verdict:
                ok = False
    report(ok, "p=4, n=16: no seat forces the win (or explicit budget report)",
           "; ".join(details))


def test_c14_priority_strategy_no_splits():
    ok = all(
        verify_no_split_reachable(n, seat)
        for n in range(2, 26)
        for seat in (1, 2)
    )
    report(ok, "priority strategy excludes splits for n in 2..25, both seats")
