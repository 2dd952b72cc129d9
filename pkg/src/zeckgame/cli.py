"""Command-line interface: every capability of the library, one subcommand each.

The parsed argument namespace is the run configuration; argparse rejects
unknown flags up front.  Outputs are deterministic: identical
invocations (with identical seeds where randomness is involved) produce
byte-identical bytes.  Exit codes: 0 success, 1 domain/validation error
or failed verification, 2 budget exhausted where a verdict was required.

    seq k                      first k sequence terms
    decompose x                legal decomposition of x (any size)
    oracle-check lo hi         enumeration oracle vs greedy over [lo, hi]
    gaps n                     interval gap statistics (CSV row)
    histogram n [--dp]         summand-count distribution over I(n)
    mc n                       combine-move count MC(n)
    mc-scan N                  MC(n)/n bound scan up to N
    matrix-verify k            exact A(k)B(k) = I and column-sum checks
    lengths n                  achievable game lengths from n
    solve n --players p --team 1,2
    verify-t9 n                priority-strategy check, both seats
    conjecture [--max-term i]  split-free probe on n = a_i
    simulate n --p1 s1 --p2 s2 --seed s
    serve --port P             run the HTTP service
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import sequence
from .decomposition import enumerate_legal, greedy_decompose, summand_count
from .game import apply_move, initial_state, is_terminal
from .gaps import CSV_HEADER, interval_gap_stats, summand_count_distribution
from .move_counts import (
    build_matrix_A,
    build_matrix_B,
    column_sums_from_row2,
    identity,
    mat_mul,
    mc,
    mc_of_term,
    mc_ratio_scan,
    ratio_decimal,
    verify_inverse_identity,
)
from .solver import TeamSpec, enumerate_game_lengths, solve_team
from .strategies import (
    STRATEGY_NAMES,
    make_strategy,
    split_free_report,
    verify_no_split_reachable,
)


class DomainError(Exception):
    """User input outside an operation's domain; exits with status 1."""


class BudgetError(Exception):
    """A required verdict hit its budget; exits with status 2."""


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_seq(args) -> None:
    if args.k < 1:
        raise DomainError(f"k must be >= 1, got {args.k}")
    ts = sequence.terms(args.k)
    if args.format == "json":
        _emit(args, json.dumps({"terms": [str(t) for t in ts]}) + "\n")
    else:
        _emit(args, ", ".join(str(t) for t in ts) + "\n")


def cmd_decompose(args) -> None:
    try:
        x = int(args.x)
    except ValueError:
        raise DomainError(f"x must be a decimal integer, got {args.x!r}")
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    d = greedy_decompose(x)
    if args.format == "json":
        _emit(args, json.dumps(
            {"x": str(x), "coeffs": list(d.coeffs), "summands": summand_count(d)}
        ) + "\n")
    else:
        _emit(args, str(d) + "\n")


def cmd_oracle_check(args) -> None:
    lo, hi = args.lo, args.hi
    if not 1 <= lo <= hi:
        raise DomainError(f"need 1 <= lo <= hi, got {lo}, {hi}")
    top = sequence.index_of_floor(hi)
    found: dict[int, tuple[int, ...]] = {}
    for d in enumerate_legal(top):
        if lo <= d.value <= hi:
            if d.value in found:
                raise DomainError(f"oracle found two decompositions of {d.value}")
            found[d.value] = d.coeffs
    for x in range(lo, hi + 1):
        if x not in found:
            raise DomainError(f"oracle found no decomposition of {x}")
        if found[x] != greedy_decompose(x).coeffs:
            raise DomainError(f"oracle and greedy disagree at {x}")
    _emit(args, f"oracle-check [{lo}, {hi}]: OK ({hi - lo + 1} values, "
                "each with exactly one legal decomposition, all matching greedy)\n")


def cmd_gaps(args) -> None:
    if args.sample is not None and args.seed is None:
        raise DomainError("--sample requires an explicit --seed for reproducibility")
    stats = interval_gap_stats(
        args.n, sample=args.sample, seed=args.seed or 0, threads=args.threads
    )
    if args.format == "json":
        mean, var, skew, kurt = stats.moments
        _emit(args, json.dumps({
            "n": stats.n,
            "interval_size": stats.interval_size,
            "processed": stats.processed,
            "total_gaps": stats.total_gaps,
            "nonzero_gaps": stats.nonzero_gaps,
            "proportion_nonzero": stats.proportion_nonzero,
            "moments": {"mean": mean, "variance": var, "skewness": skew,
                        "excess_kurtosis": kurt},
            "gap_histogram": {str(k): v for k, v in sorted(stats.gap_histogram.items())},
            "summand_count_histogram": {
                str(k): v for k, v in sorted(stats.summand_count_histogram.items())
            },
            "mean_multiplicity": {
                str(i): stats.mean_multiplicity(i) for i in range(1, args.n + 1)
            },
        }) + "\n")
    else:
        _emit(args, _csv_text([CSV_HEADER, stats.csv_row()]))
    if args.histograms:
        with open(args.histograms, "w", encoding="utf-8") as fh:
            json.dump({
                "gap_histogram": {str(k): v for k, v in sorted(stats.gap_histogram.items())},
                "summand_count_histogram": {
                    str(k): v for k, v in sorted(stats.summand_count_histogram.items())
                },
            }, fh, sort_keys=True)
            fh.write("\n")


def cmd_histogram(args) -> None:
    hist = summand_count_distribution(args.n, "dp" if args.dp else "enumerate")
    _emit(args, json.dumps({str(k): v for k, v in hist.items()}) + "\n")


def cmd_mc(args) -> None:
    if args.n < 1:
        raise DomainError(f"n must be >= 1, got {args.n}")
    _emit(args, f"{mc(args.n)}\n")


def cmd_mc_scan(args) -> None:
    if args.N < 2:
        raise DomainError(f"N must be >= 2, got {args.N}")
    result = mc_ratio_scan(args.N, series_len=args.series_len)
    rows = [["n", "mc", "ratio"]]
    for i, ratio in result.term_ratios:
        rows.append([str(sequence.term(i)), str(mc_of_term(i)), ratio_decimal(ratio)])
    lines = [
        f"max MC(n)/n over n <= {args.N}: {ratio_decimal(result.max_ratio)} "
        f"at n = {result.argmax_n}",
        "bound 0.7757 holds" if result.bound_holds else "bound 0.7757 VIOLATED",
    ]
    _emit(args, "\n".join(lines) + "\n")
    if args.output_series:
        with open(args.output_series, "w", encoding="utf-8", newline="") as fh:
            fh.write(_csv_text(rows))
    if not result.bound_holds:
        raise DomainError("scan found MC(n)/n >= 7757/10000")


def cmd_matrix_verify(args) -> None:
    if args.k < 3:
        raise DomainError(f"k must be >= 3, got {args.k}")
    a, b = build_matrix_A(args.k), build_matrix_B(args.k)
    product_ok = mat_mul(a, b) == identity(args.k)
    sums = column_sums_from_row2(b)
    sums_ok = all(sums[j - 2] == mc_of_term(j) for j in range(2, args.k + 1))
    _emit(args,
          f"A({args.k})*B({args.k}) == I: {'OK' if product_ok else 'FAIL'}\n"
          f"column sums rows 2..j == MC(a_j) for j=2..{args.k}: "
          f"{'OK' if sums_ok else 'FAIL'}\n")
    if not verify_inverse_identity(args.k):
        raise DomainError("matrix identity verification failed")


def cmd_lengths(args) -> None:
    if args.n < 2:
        raise DomainError(f"n must be >= 2, got {args.n}")
    lengths = sorted(enumerate_game_lengths(args.n))
    if args.format == "json":
        _emit(args, json.dumps({"n": args.n, "lengths": lengths}) + "\n")
    elif args.format == "csv":
        # spectrum row: n followed by every achievable length
        _emit(args, _csv_text([[str(args.n)] + [str(v) for v in lengths]]))
    else:
        _emit(args, "{" + ", ".join(str(v) for v in lengths) + "}\n")


def cmd_solve(args) -> None:
    if args.n < 2:
        raise DomainError(f"n must be >= 2, got {args.n}")
    try:
        team = frozenset(int(s) for s in args.team.split(","))
        spec = TeamSpec(args.players, team, args.first_mover)
    except ValueError as exc:
        raise DomainError(str(exc))
    result = solve_team(args.n, spec, budget=args.budget)
    rows = [
        ["n", "p", "team", "verdict", "nodes", "budget_exhausted"],
        [
            str(args.n),
            str(args.players),
            "+".join(str(s) for s in sorted(team)),
            str(result.verdict).lower(),
            str(result.nodes_expanded),
            str(result.budget_exhausted).lower(),
        ],
    ]
    _emit(args, _csv_text(rows))
    if result.budget_exhausted:
        raise BudgetError(f"budget {args.budget} exhausted; verdict unknown")


def cmd_verify_t9(args) -> None:
    if args.n < 2:
        raise DomainError(f"n must be >= 2, got {args.n}")
    lines = []
    all_ok = True
    for seat in (1, 2):
        ok = verify_no_split_reachable(args.n, seat)
        all_ok &= ok
        lines.append(f"n={args.n} protagonist seat {seat}: "
                     f"{'no split ever playable' if ok else 'FAILED'}")
    _emit(args, "\n".join(lines) + "\n")
    if not all_ok:
        raise DomainError("priority-strategy verification failed")


def cmd_conjecture(args) -> None:
    if args.max_term < 2:
        raise DomainError(f"--max-term must be >= 2, got {args.max_term}")
    rows = [["i", "a_i", "every_game_split_free", "states_examined"]]
    for i in range(2, args.max_term + 1):
        rep = split_free_report(sequence.term(i))
        rows.append([str(i), str(rep.n), str(rep.split_free).lower(),
                     str(rep.states_examined)])
    _emit(args, _csv_text(rows))


def cmd_simulate(args) -> None:
    if args.n < 2:
        raise DomainError(f"n must be >= 2, got {args.n}")
    for name in (args.p1, args.p2):
        if name not in STRATEGY_NAMES:
            raise DomainError(f"unknown strategy {name!r}; known: {', '.join(STRATEGY_NAMES)}")
    bots = {
        1: make_strategy(args.p1, seed=args.seed, budget=args.budget),
        2: make_strategy(args.p2, seed=args.seed + 1, budget=args.budget),
    }
    state = initial_state(args.n)
    lines = [f"game on n={args.n}: {args.p1} (player 1) vs {args.p2} (player 2), "
             f"seed {args.seed}"]
    mover = 1
    moves = 0
    while not is_terminal(state):
        move = bots[mover].choose(state)
        state = apply_move(state, move)
        moves += 1
        lines.append(f"{moves:3d}. player {mover}: {move}  -> {state.counts}")
        mover = mover % 2 + 1
    winner = mover % 2 + 1  # the one who just moved
    lines.append(f"winner: player {winner} after {moves} moves; final {state.counts}")
    _emit(args, "\n".join(lines) + "\n")


def cmd_serve(args) -> None:
    import uvicorn

    from .service import create_app

    app = create_app(persist_dir=args.persist_dir, bot_time_cap=args.bot_time_cap)
    if args.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=args.ui_dir, html=True), name="ui")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeckgame",
        description="Decompositions and the last-move-wins game on "
                    "a_{i+1} = i*a_i + a_{i-1}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--output", help="write output to this file instead of stdout")
        return p

    p = add("seq", cmd_seq, help="print the first k sequence terms")
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = add("decompose", cmd_decompose, help="legal decomposition of x")
    p.add_argument("x", help="positive integer, any number of digits")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = add("oracle-check", cmd_oracle_check,
            help="brute-force uniqueness/greedy cross-check over [lo, hi]")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)

    p = add("gaps", cmd_gaps, help="gap statistics over I(n) = [a_n, a_{n+1})")
    p.add_argument("n", type=int)
    p.add_argument("--sample", type=int, help="sample size (default: exhaustive)")
    p.add_argument("--seed", type=int, help="RNG seed; required with --sample")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--histograms", help="also dump histograms as JSON to this file")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("histogram", cmd_histogram, help="summand-count distribution over I(n)")
    p.add_argument("n", type=int)
    p.add_argument("--dp", action="store_true",
                   help="count by dynamic programming instead of enumeration")

    p = add("mc", cmd_mc, help="combine-move count MC(n)")
    p.add_argument("n", type=int)

    p = add("mc-scan", cmd_mc_scan, help="scan MC(n)/n against the 0.7757 bound")
    p.add_argument("N", type=int)
    p.add_argument("--series-len", type=int, default=50,
                   help="how many MC(a_i)/a_i ratios to emit")
    p.add_argument("--output-series", help="write the per-term ratio CSV here")

    p = add("matrix-verify", cmd_matrix_verify,
            help="exact A(k)B(k) = I and column-sum identities")
    p.add_argument("k", type=int)

    p = add("lengths", cmd_lengths, help="achievable complete-game lengths from n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = add("solve", cmd_solve, help="can the team force the last move?")
    p.add_argument("n", type=int)
    p.add_argument("--players", type=int, required=True)
    p.add_argument("--team", required=True, help="comma-separated seats, e.g. 1,3")
    p.add_argument("--first-mover", type=int, default=1)
    p.add_argument("--budget", type=int, help="node-expansion cap")

    p = add("verify-t9", cmd_verify_t9,
            help="exhaustive no-split check of the priority strategy, both seats")
    p.add_argument("n", type=int)

    p = add("conjecture", cmd_conjecture,
            help="probe: is every game on n = a_i split-free?")
    p.add_argument("--max-term", type=int, default=6)

    p = add("simulate", cmd_simulate, help="bot-vs-bot game with named strategies")
    p.add_argument("n", type=int)
    p.add_argument("--p1", required=True, choices=STRATEGY_NAMES)
    p.add_argument("--p2", required=True, choices=STRATEGY_NAMES)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, help="budget for 'optimal' seats")

    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p.set_defaults(fn=cmd_serve)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--persist-dir", help="append per-session JSONL move logs here")
    p.add_argument("--ui-dir", help="also serve this directory of static files at /")
    p.add_argument("--bot-time-cap", type=float, default=2.0,
                   help="seconds of bot moves per request before flagging bot_pending")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
