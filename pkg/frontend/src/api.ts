// Typed client for the game service. All JSON shapes mirror the server
// verbatim; the client performs no rule computation of its own.

export interface StateView {
  n: number;
  counts: number[];
  terminal: boolean;
}

export interface MoveView {
  kind: "combine" | "split";
  index: number;
}

export interface HistoryEntry {
  seat: number;
  move: MoveView;
}

export interface SessionView {
  id: string;
  n: number;
  p: number;
  seats: string[];
  state: StateView;
  legal_moves: MoveView[];
  to_move: number | null;
  bot_pending: boolean;
  history: HistoryEntry[];
  winner: number | null;
  created: number;
  updated: number;
}

export interface AnalysisEntry {
  move: MoveView;
  resulting_state: StateView;
  winning: boolean | null; // null = budget exceeded, verdict unknown
  budget_exhausted: boolean;
  min_remaining_moves: number;
  max_remaining_moves: number;
}

export interface AnalysisView {
  id: string;
  to_move: number | null;
  terminal: boolean;
  winner: number | null;
  moves: AnalysisEntry[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    const err = body as Partial<ApiErrorBody>;
    throw new ApiError(response.status, {
      code: err.code ?? "unknown_error",
      message: err.message ?? `request failed with status ${response.status}`,
    });
  }
  return body as T;
}

export class GameClient {
  constructor(readonly base: string) {}

  createGame(params: {
    n: number;
    p?: number;
    seats?: string[];
    seed?: number;
    budget?: number;
  }): Promise<SessionView> {
    return request(this.base, "/games", {
      method: "POST",
      body: JSON.stringify(params),
    });
  }

  getGame(id: string): Promise<SessionView> {
    return request(this.base, `/games/${id}`);
  }

  postMove(id: string, move: MoveView): Promise<SessionView> {
    return request(this.base, `/games/${id}/moves`, {
      method: "POST",
      body: JSON.stringify(move),
    });
  }

  getAnalysis(id: string, budget?: number): Promise<AnalysisView> {
    const query = budget === undefined ? "" : `?budget=${budget}`;
    return request(this.base, `/games/${id}/analysis${query}`);
  }

  sequenceTerms(upTo: number): Promise<string[]> {
    return request<{ terms: string[] }>(this.base, `/sequence?upTo=${upTo}`).then(
      (body) => body.terms,
    );
  }

  decompose(x: string): Promise<{ x: string; coeffs: number[]; summands: number; pretty: string }> {
    return request(this.base, `/decompose?x=${encodeURIComponent(x)}`);
  }
}
