// End-to-end: drive the real HTTP service through the same client the
// page uses. Covers the UI session criteria: game creation, illegal
// move rejection with unchanged state, a full game reaching the unique
// decomposition with the winner banner naming the last mover, and
// what-if verdicts agreeing with the command-line solver.

import { execFile, spawn, type ChildProcess } from "node:child_process";
import { promisify } from "node:util";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, GameClient, type SessionView } from "../src/api.js";
import { turnBanner } from "../src/model.js";

const execFileAsync = promisify(execFile);

const PORT = 8473;
const BASE = `http://127.0.0.1:${PORT}`;
const REPO_ROOT = new URL("../..", import.meta.url).pathname;

let server: ChildProcess;
const client = new GameClient(BASE);

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      await client.sequenceTerms(1);
      return;
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 200));
    }
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "zeckgame.cli", "serve", "--port", String(PORT)], {
    cwd: REPO_ROOT,
    stdio: "ignore",
  });
  await waitForServer();
}, 60_000);

afterAll(() => {
  server.kill();
});

async function playToCompletion(view: SessionView): Promise<SessionView> {
  while (view.to_move !== null) {
    expect(view.legal_moves.length).toBeGreaterThan(0);
    view = await client.postMove(view.id, view.legal_moves[0]);
  }
  return view;
}

describe("UI session against the live service", () => {
  it("creates an n=10 human-vs-protagonist game awaiting the human", async () => {
    const view = await client.createGame({ n: 10, p: 2, seats: ["human", "protagonist"] });
    expect(view.state).toEqual({ n: 10, counts: [10, 0, 0], terminal: false });
    expect(view.to_move).toBe(1);
    expect(turnBanner(view)).toContain("Your move");
  });

  it("rejects an illegal split and leaves the state unchanged", async () => {
    const view = await client.createGame({ n: 10, p: 2, seats: ["human", "protagonist"] });
    let rejected: ApiError | null = null;
    try {
      await client.postMove(view.id, { kind: "split", index: 2 });
    } catch (err) {
      rejected = err as ApiError;
    }
    expect(rejected).toBeInstanceOf(ApiError);
    expect(rejected!.status).toBe(400);
    expect(rejected!.code).toBe("illegal_move");
    const after = await client.getGame(view.id);
    expect(after.state.counts).toEqual([10, 0, 0]);
    expect(after.history).toEqual([]);
  });

  it("plays a full legal game to {5^2} and names the last mover as winner", async () => {
    const start = await client.createGame({ n: 10, p: 2, seats: ["human", "protagonist"] });
    const done = await playToCompletion(start);
    expect(done.state.terminal).toBe(true);
    expect(done.state.counts).toEqual([0, 0, 2]); // two copies of 5
    expect(done.winner).toBe(done.history[done.history.length - 1].seat);
    const banner = turnBanner(done);
    expect(banner).toContain(`seat ${done.winner}`);
    expect(banner).toContain("wins");
  });

  it("validates n=1 client-side and server-side", async () => {
    const { validateNewGame } = await import("../src/model.js");
    expect(validateNewGame(1, ["human", "protagonist"])).not.toBeNull();
    let rejected: ApiError | null = null;
    try {
      await client.createGame({ n: 1, p: 2, seats: ["human", "protagonist"] });
    } catch (err) {
      rejected = err as ApiError;
    }
    expect(rejected?.code).toBe("degenerate_game");
  });

  it("what-if verdicts for n=6 match the command-line solver", async () => {
    const view = await client.createGame({ n: 6, p: 2, seats: ["human", "human"] });
    const analysis = await client.getAnalysis(view.id, 1_000_000);
    expect(analysis.moves.length).toBeGreaterThan(0);

    // the CLI solves the same position: can seat 1 force the last move?
    const { stdout } = await execFileAsync(
      "python3",
      ["-m", "zeckgame.cli", "solve", "6", "--players", "2", "--team", "1"],
      { cwd: REPO_ROOT },
    );
    const verdictCell = stdout.trim().split("\n")[1].split(",")[3];
    const seat1Wins = verdictCell === "true";

    // at (6,0,0) exactly one move is legal; playing it keeps the win
    // for seat 1 iff seat 1 wins the whole game
    expect(analysis.moves).toHaveLength(1);
    expect(analysis.moves[0].winning).toBe(seat1Wins);
  });

  it("bot-vs-bot games replay deterministically from history", async () => {
    const view = await client.createGame({
      n: 6,
      p: 2,
      seats: ["combine-only", "uniform"],
      seed: 12,
    });
    expect(view.state.terminal).toBe(true);
    expect([3, 4]).toContain(view.history.length);
  });
});
