// Pure view-model: everything the page shows is derived here from the
// latest server response. No game rules live on the client; the only
// clickable moves are the ones the server listed as legal.

import type { AnalysisEntry, AnalysisView, MoveView, SessionView } from "./api.js";

const SUPERSCRIPTS = "⁰¹²³⁴⁵⁶⁷⁸⁹";

export function superscript(value: number): string {
  return String(value)
    .split("")
    .map((ch) => SUPERSCRIPTS[Number(ch)])
    .join("");
}

/** "17" + count 5 -> "17⁵"; count 1 is rendered bare. */
function power(term: string, count: number): string {
  return count === 1 ? term : term + superscript(count);
}

/**
 * Label a move in recurrence notation, e.g. C2 -> "2² ∧ 1 → 5" and
 * S4 -> "17⁵ → 73 ∧ 5² ∧ 2". `terms` holds a_1.. as decimal strings
 * fetched from the server (index 0 is a_1).
 */
export function moveLabel(move: MoveView, terms: string[]): string {
  const i = move.index;
  const a = (j: number) => {
    const value = terms[j - 1];
    if (value === undefined) throw new Error(`term a_${j} not loaded`);
    return value;
  };
  if (move.kind === "combine") {
    if (i === 1) return `${power(a(1), 2)} → ${a(2)}`;
    return `${power(a(i), i)} ∧ ${a(i - 1)} → ${a(i + 1)}`;
  }
  if (i === 2) return `${power(a(2), 3)} → ${a(1)} ∧ ${a(3)}`;
  const tail =
    i - 2 === 1
      ? `${a(i - 1)} ∧ ${a(i - 2)}`
      : `${power(a(i - 1), i - 2)} ∧ ${a(i - 2)}`;
  return `${power(a(i), i + 1)} → ${a(i + 1)} ∧ ${tail}`;
}

export function moveKey(move: MoveView): string {
  return `${move.kind}:${move.index}`;
}

export interface Stack {
  index: number; // 1-based sequence index
  term: string; // decimal value of a_index
  count: number;
}

export function boardStacks(session: SessionView, terms: string[]): Stack[] {
  return session.state.counts.map((count, idx) => ({
    index: idx + 1,
    term: terms[idx] ?? "?",
    count,
  }));
}

export function seatName(session: SessionView, seat: number): string {
  const controller = session.seats[seat - 1];
  return controller === "human" ? `seat ${seat} (you)` : `seat ${seat} (${controller})`;
}

export function turnBanner(session: SessionView): string {
  if (session.state.terminal) {
    const winner = session.winner;
    return winner === null
      ? "Game over."
      : `Game over — ${seatName(session, winner)} made the last move and wins!`;
  }
  if (session.bot_pending) return "Bot thinking…";
  const seat = session.to_move;
  if (seat === null) return "Game over.";
  const controller = session.seats[seat - 1];
  return controller === "human"
    ? `Your move — ${seatName(session, seat)}`
    : `Waiting for ${seatName(session, seat)}…`;
}

export function historyLines(session: SessionView, terms: string[]): string[] {
  return session.history.map(
    (entry, idx) =>
      `${idx + 1}. ${seatName(session, entry.seat)}: ${moveLabel(entry.move, terms)}`,
  );
}

export function isHumanTurn(session: SessionView): boolean {
  return (
    session.to_move !== null &&
    !session.bot_pending &&
    session.seats[session.to_move - 1] === "human"
  );
}

export function whatIfVerdict(entry: AnalysisEntry): string {
  if (entry.budget_exhausted) return "budget exceeded";
  if (entry.winning === true) return "you can still force the last move";
  if (entry.winning === false) return "opponents can force the last move";
  return "unknown";
}

export function whatIfLines(
  analysis: AnalysisView,
  terms: string[],
): { key: string; label: string; verdict: string; resulting: number[] }[] {
  return analysis.moves.map((entry) => ({
    key: moveKey(entry.move),
    label: moveLabel(entry.move, terms),
    verdict: whatIfVerdict(entry),
    resulting: entry.resulting_state.counts,
  }));
}

/** Client-side form validation; the server re-validates everything
 * (including bot names, whose rejections are shown verbatim). */
export function validateNewGame(n: number, seats: string[]): string | null {
  if (!Number.isInteger(n) || n < 2) return "n must be an integer ≥ 2";
  if (seats.length < 2) return "need at least two seats";
  return null;
}
