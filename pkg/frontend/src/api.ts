/** Typed HTTP client for the lightsout service.
 *
 * The base URL and the fetch implementation are injectable so the client
 * runs unchanged in the browser, in Node tests against a live server, and
 * in unit tests against a faked fetch.
 */

import type {
  ColoredHintDoc,
  CreateGameRequest,
  GfHintDoc,
  GfSessionDoc,
  HintMode,
  InvariantDoc,
  SessionDoc,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: unknown,
    message?: string,
  ) {
    super(message ?? `request failed with status ${status}`);
    this.name = "ApiError";
  }
}

/** 409: the requested target is not reachable from the current state. */
export class UnsolvableError extends ApiError {
  readonly residual: string | null;

  constructor(status: number, body: unknown) {
    super(status, body, "target is unreachable from the current state");
    this.name = "UnsolvableError";
    const doc = body as { residual?: unknown } | null;
    this.residual = typeof doc?.residual === "string" ? doc.residual : null;
  }
}

/** 503: the minimum-weight search would exceed the server's budget. */
export class BudgetError extends ApiError {
  readonly cosetSize: number;
  readonly budget: number;

  constructor(status: number, body: unknown) {
    super(status, body, "minimum-weight search budget exceeded");
    this.name = "BudgetError";
    const doc = body as { coset_size?: unknown; budget?: unknown } | null;
    this.cosetSize = typeof doc?.coset_size === "number" ? doc.coset_size : -1;
    this.budget = typeof doc?.budget === "number" ? doc.budget : -1;
  }
}

/** The slice of the client the board controller needs (easy to stub). */
export interface GameApi {
  getGame(id: string): Promise<SessionDoc>;
  press(id: string, vertex: number): Promise<SessionDoc>;
  hint(id: string, mode: HintMode, target?: string): Promise<GfHintDoc>;
}

/** Same idea for colored sessions. */
export interface ColoredGameApi {
  getGame(id: string): Promise<SessionDoc>;
  press(id: string, vertex: number): Promise<SessionDoc>;
  coloredHint(id: string, target?: number[]): Promise<ColoredHintDoc>;
}

export class ApiClient implements GameApi, ColoredGameApi {
  private readonly fetchImpl: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchImpl?: FetchLike,
  ) {
    // bind the global fetch lazily so constructing a client never throws
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.baseUrl + path, init);
    if (res.status === 204) {
      return undefined as T;
    }
    let data: unknown = null;
    try {
      data = await res.json();
    } catch {
      data = null;
    }
    if (!res.ok) {
      const errorKind = (data as { error?: unknown } | null)?.error;
      if (res.status === 409) {
        throw new UnsolvableError(res.status, data);
      }
      if (res.status === 503 && errorKind === "budget-exceeded") {
        throw new BudgetError(res.status, data);
      }
      const detail = (data as { detail?: unknown } | null)?.detail;
      const message = typeof detail === "string" ? detail : undefined;
      throw new ApiError(res.status, data, message);
    }
    return data as T;
  }

  createGame(req: CreateGameRequest): Promise<SessionDoc> {
    return this.request<SessionDoc>("POST", "/games", req);
  }

  getGame(id: string): Promise<SessionDoc> {
    return this.request<SessionDoc>("GET", `/games/${id}`);
  }

  press(id: string, vertex: number): Promise<SessionDoc> {
    return this.request<SessionDoc>("POST", `/games/${id}/press`, { vertex });
  }

  hint(id: string, mode: HintMode, target?: string): Promise<GfHintDoc> {
    const body: { mode: HintMode; target?: string } = { mode };
    if (target !== undefined) {
      body.target = target;
    }
    return this.request<GfHintDoc>("POST", `/games/${id}/hint`, body);
  }

  coloredHint(id: string, target?: number[]): Promise<ColoredHintDoc> {
    const body: { mode: "any"; target?: number[] } = { mode: "any" };
    if (target !== undefined) {
      body.target = target;
    }
    return this.request<ColoredHintDoc>("POST", `/games/${id}/hint`, body);
  }

  invariant(id: string): Promise<InvariantDoc> {
    return this.request<InvariantDoc>("GET", `/games/${id}/invariant`);
  }

  deleteGame(id: string): Promise<void> {
    return this.request<void>("DELETE", `/games/${id}`);
  }
}

/** Narrow a session document to the GF(2) kind (the kind the board plays). */
export function asGfSession(doc: SessionDoc): GfSessionDoc {
  if (doc.kind !== "gf2") {
    throw new Error(`expected a GF(2) session, got kind ${doc.kind}`);
  }
  return doc;
}
