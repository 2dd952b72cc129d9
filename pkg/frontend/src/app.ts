// Page wiring: render the latest server response, send the clicks back.
// One in-flight mutation at a time; bot_pending states are polled.

import { ApiError, GameClient, MoveView, SessionView } from "./api.js";
import {
  boardStacks,
  historyLines,
  isHumanTurn,
  moveKey,
  moveLabel,
  turnBanner,
  validateNewGame,
  whatIfLines,
} from "./model.js";

const client = new GameClient("");

let session: SessionView | null = null;
let terms: string[] = [];
let busy = false; // a mutation is in flight; inputs disabled
let pollTimer: number | undefined;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setError(message: string | null): void {
  const box = el<HTMLDivElement>("error");
  box.textContent = message ?? "";
  box.style.display = message ? "block" : "none";
}

async function refresh(): Promise<void> {
  if (!session) return;
  apply(await client.getGame(session.id));
}

function schedulePoll(): void {
  if (pollTimer !== undefined) window.clearTimeout(pollTimer);
  if (session && session.bot_pending) {
    pollTimer = window.setTimeout(() => {
      refresh().catch((err) => setError(String(err)));
    }, 300);
  }
}

function apply(next: SessionView): void {
  session = next;
  render();
  schedulePoll();
}

async function newGame(): Promise<void> {
  setError(null);
  const n = Number(el<HTMLInputElement>("n-input").value);
  const seats = el<HTMLInputElement>("seats-input")
    .value.split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0);
  const problem = validateNewGame(n, seats);
  if (problem) {
    setError(problem);
    return;
  }
  busy = true;
  render();
  try {
    const created = await client.createGame({
      n,
      p: seats.length,
      seats,
      seed: Date.now() % 100000,
    });
    terms = await client.sequenceTerms(created.state.counts.length);
    el<HTMLDivElement>("whatif").innerHTML = "";
    apply(created);
  } catch (err) {
    setError(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
  } finally {
    busy = false;
    render();
  }
}

async function playMove(move: MoveView): Promise<void> {
  if (!session || busy || !isHumanTurn(session)) return;
  setError(null);
  busy = true;
  render(); // optimistic disable while the request runs
  try {
    apply(await client.postMove(session.id, move));
  } catch (err) {
    if (err instanceof ApiError) {
      setError(`${err.code}: ${err.message}`);
      // conflict or stale tab: re-sync from the server
      await refresh().catch(() => undefined);
    } else {
      setError(String(err));
    }
  } finally {
    busy = false;
    render();
  }
}

async function loadWhatIf(): Promise<void> {
  if (!session) return;
  const panel = el<HTMLDivElement>("whatif");
  panel.innerHTML = "<em>analyzing…</em>";
  try {
    const analysis = await client.getAnalysis(session.id, 2_000_000);
    const rows = whatIfLines(analysis, terms);
    if (rows.length === 0) {
      panel.innerHTML = "<em>game over — nothing to explore</em>";
      return;
    }
    panel.innerHTML = "";
    for (const row of rows) {
      const div = document.createElement("div");
      div.className = "whatif-row";
      const stacks = row.resulting.map((c, i) => `${c}×${terms[i] ?? "?"}`).join("  ");
      div.textContent = `${row.label}  ⇒  ${stacks}  —  ${row.verdict}`;
      panel.appendChild(div); // display only: selecting a what-if never plays it
    }
  } catch (err) {
    panel.textContent = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
  }
}

function render(): void {
  const board = el<HTMLDivElement>("board");
  const movesBox = el<HTMLDivElement>("moves");
  const banner = el<HTMLDivElement>("banner");
  const historyBox = el<HTMLOListElement>("history");
  board.innerHTML = "";
  movesBox.innerHTML = "";
  historyBox.innerHTML = "";
  if (!session) {
    banner.textContent = "Start a game.";
    return;
  }
  banner.textContent = turnBanner(session);
  banner.className = session.state.terminal ? "banner winner" : "banner";

  for (const stack of boardStacks(session, terms)) {
    const div = document.createElement("div");
    div.className = "stack";
    const tokens = document.createElement("div");
    tokens.className = "tokens";
    const shown = Math.min(stack.count, 24);
    for (let i = 0; i < shown; i++) {
      const token = document.createElement("span");
      token.className = "token";
      token.textContent = stack.term;
      tokens.appendChild(token);
    }
    if (stack.count > shown) {
      const more = document.createElement("span");
      more.className = "more";
      more.textContent = `+${stack.count - shown}`;
      tokens.appendChild(more);
    }
    const label = document.createElement("div");
    label.className = "stack-label";
    label.textContent = `a${stack.index} = ${stack.term} — ${stack.count} ${
      stack.count === 1 ? "copy" : "copies"
    }`;
    div.appendChild(tokens);
    div.appendChild(label);
    board.appendChild(div);
  }

  const clickable = isHumanTurn(session) && !busy;
  for (const move of session.legal_moves) {
    const button = document.createElement("button");
    button.textContent = moveLabel(move, terms);
    button.disabled = !clickable;
    button.dataset.move = moveKey(move);
    button.addEventListener("click", () => void playMove(move));
    movesBox.appendChild(button);
  }

  for (const line of historyLines(session, terms)) {
    const item = document.createElement("li");
    item.textContent = line;
    historyBox.appendChild(item);
  }
}

export function start(): void {
  el<HTMLButtonElement>("new-game").addEventListener("click", () => void newGame());
  el<HTMLButtonElement>("analyze").addEventListener("click", () => void loadWhatIf());
  render();
}

start();
