/** DOM-free board controllers for GF(2) and colored sessions.
 *
 * Presses apply optimistically (update the closed neighborhood locally,
 * then reconcile with the authoritative server document), while the
 * actual HTTP mutations are serialized through a queue so a session never
 * has two writes in flight.  Hints keep a highlight overlay that shrinks
 * as hinted cells are pressed, and failures surface as banner states:
 * a 409 becomes an "unsolvable" banner carrying the invariant residual,
 * a 503 on a min hint retries in "any" mode with a notice.  A newer hint
 * request (or cancelHint) invalidates any older one still in flight.
 */

import { BudgetError, UnsolvableError, asGfSession } from "./api.js";
import type { ColoredGameApi, GameApi } from "./api.js";
import type { ColoredSessionDoc, GfSessionDoc, GraphDoc, HintMode } from "./types.js";

export type Banner =
  | { kind: "unsolvable"; residual: string | null }
  | { kind: "hint-fallback"; message: string };

/** Closed neighborhood of each vertex; directed edges toggle tail→head. */
function closedNeighborhoods(graph: GraphDoc): number[][] {
  const closed: Array<Set<number>> = [];
  for (let v = 0; v < graph.n; v++) {
    closed.push(new Set([v]));
  }
  for (const [u, v] of graph.edges) {
    closed[u]!.add(v);
    if (!graph.directed) {
      closed[v]!.add(u);
    }
  }
  return closed.map((s) => [...s].sort((a, b) => a - b));
}

/** Serializes mutations: at most one in flight, failures don't jam it.
 * An idle queue starts the task synchronously so the request leaves in
 * the same tick as the click.
 */
class MutationQueue {
  private chain: Promise<void> | null = null;

  run<T>(task: () => Promise<T>): Promise<T> {
    const result = this.chain === null ? task() : this.chain.then(task);
    const link: Promise<void> = result.then(
      () => {
        if (this.chain === link) this.chain = null;
      },
      () => {
        if (this.chain === link) this.chain = null;
      },
    );
    this.chain = link;
    return result;
  }
}

export class BoardController {
  session: GfSessionDoc;
  /** Cells currently highlighted as hint suggestions. */
  readonly hinted = new Set<number>();
  banner: Banner | null = null;
  private readonly closed: number[][];
  private readonly queue = new MutationQueue();
  /** Presses applied locally but not yet acknowledged by the server. */
  private readonly queued: number[] = [];
  private optimistic: string;
  private hintGeneration = 0;

  constructor(
    private readonly api: GameApi,
    session: GfSessionDoc,
  ) {
    this.session = session;
    this.optimistic = session.state;
    this.closed = closedNeighborhoods(session.graph);
  }

  /** The state to draw right now (optimistic until the server answers). */
  get state(): string {
    return this.optimistic;
  }

  get won(): boolean {
    return this.optimistic !== "" && !this.optimistic.includes("1");
  }

  isLit(vertex: number): boolean {
    return this.optimistic[vertex] === "1";
  }

  isHinted(vertex: number): boolean {
    return this.hinted.has(vertex);
  }

  dismissBanner(): void {
    this.banner = null;
  }

  private recomputeOptimistic(): void {
    const bits = this.session.state.split("");
    for (const v of this.queued) {
      for (const t of this.closed[v]!) {
        bits[t] = bits[t] === "1" ? "0" : "1";
      }
    }
    this.optimistic = bits.join("");
  }

  /** Press a cell: toggle locally at once; the write itself is queued. */
  press(vertex: number): Promise<void> {
    if (vertex < 0 || vertex >= this.session.n) {
      return Promise.reject(new RangeError(`vertex ${vertex} out of range`));
    }
    this.hinted.delete(vertex);
    this.queued.push(vertex);
    this.recomputeOptimistic();

    return this.queue.run(async () => {
      try {
        this.session = asGfSession(await this.api.press(this.session.id, vertex));
      } finally {
        // drop this press from the local queue whether it landed or not;
        // on failure the recompute falls back to the last good server state
        this.queued.splice(this.queued.indexOf(vertex), 1);
        this.recomputeOptimistic();
      }
    });
  }

  /** Ask for a press set towards `target` (default: all lamps off).
   *
   * Returns the hinted cells in ascending order, or null when the target
   * is unreachable (the banner then carries the invariant residual) or
   * when the request was superseded or cancelled.
   */
  async requestHint(mode: HintMode = "min", target?: string): Promise<number[] | null> {
    const generation = ++this.hintGeneration;
    this.banner = null;
    let doc;
    try {
      doc = await this.api.hint(this.session.id, mode, target);
    } catch (err) {
      if (generation !== this.hintGeneration) {
        return null; // superseded while failing; say nothing
      }
      if (err instanceof BudgetError && mode === "min") {
        this.banner = {
          kind: "hint-fallback",
          message:
            `exact minimum needs ${err.cosetSize} coset points ` +
            `(budget ${err.budget}); showing a non-minimal solution`,
        };
        try {
          doc = await this.api.hint(this.session.id, "any", target);
        } catch (inner) {
          if (generation !== this.hintGeneration) {
            return null;
          }
          if (inner instanceof UnsolvableError) {
            this.applyUnsolvable(inner);
            return null;
          }
          throw inner;
        }
      } else if (err instanceof UnsolvableError) {
        this.applyUnsolvable(err);
        return null;
      } else {
        throw err;
      }
    }
    if (generation !== this.hintGeneration) {
      return null; // a newer request owns the overlay
    }
    this.hinted.clear();
    for (let v = 0; v < doc.presses.length; v++) {
      if (doc.presses[v] === "1") {
        this.hinted.add(v);
      }
    }
    return [...this.hinted].sort((a, b) => a - b);
  }

  /** Invalidate any hint request still in flight. */
  cancelHint(): void {
    this.hintGeneration++;
  }

  private applyUnsolvable(err: UnsolvableError): void {
    this.hinted.clear();
    this.banner = { kind: "unsolvable", residual: err.residual };
  }

  /** Re-read the server document, dropping any stale optimistic state. */
  async refresh(): Promise<void> {
    this.session = asGfSession(await this.api.getGame(this.session.id));
    this.recomputeOptimistic();
  }
}

/** Controller for k-colored sessions: presses bump neighborhoods mod k,
 * the hint overlay carries press *counts* that tick down as cells are
 * pressed, and the win target is the all-zero coloring.
 */
export class ColoredBoardController {
  session: ColoredSessionDoc;
  /** Remaining hinted presses per vertex. */
  readonly hintCounts = new Map<number, number>();
  banner: Banner | null = null;
  private readonly closed: number[][];
  private readonly queue = new MutationQueue();
  private readonly queued: number[] = [];
  private optimistic: number[];

  constructor(
    private readonly api: ColoredGameApi,
    session: ColoredSessionDoc,
  ) {
    this.session = session;
    this.optimistic = [...session.state];
    this.closed = closedNeighborhoods(session.graph);
  }

  get k(): number {
    return this.session.k;
  }

  get state(): readonly number[] {
    return this.optimistic;
  }

  get won(): boolean {
    return this.optimistic.length > 0 && this.optimistic.every((v) => v === 0);
  }

  colorOf(vertex: number): number {
    return this.optimistic[vertex] ?? 0;
  }

  hintedCount(vertex: number): number {
    return this.hintCounts.get(vertex) ?? 0;
  }

  dismissBanner(): void {
    this.banner = null;
  }

  private recomputeOptimistic(): void {
    const values = [...this.session.state];
    for (const v of this.queued) {
      for (const t of this.closed[v]!) {
        values[t] = (values[t]! + 1) % this.k;
      }
    }
    this.optimistic = values;
  }

  press(vertex: number): Promise<void> {
    if (vertex < 0 || vertex >= this.session.n) {
      return Promise.reject(new RangeError(`vertex ${vertex} out of range`));
    }
    const remaining = this.hintCounts.get(vertex);
    if (remaining !== undefined) {
      if (remaining <= 1) {
        this.hintCounts.delete(vertex);
      } else {
        this.hintCounts.set(vertex, remaining - 1);
      }
    }
    this.queued.push(vertex);
    this.recomputeOptimistic();

    return this.queue.run(async () => {
      try {
        const doc = await this.api.press(this.session.id, vertex);
        if (doc.kind !== "colored") {
          throw new Error(`expected a colored session, got kind ${doc.kind}`);
        }
        this.session = doc;
      } finally {
        this.queued.splice(this.queued.indexOf(vertex), 1);
        this.recomputeOptimistic();
      }
    });
  }

  /** Fetch press counts towards the all-zero coloring (or `target`). */
  async requestHint(target?: number[]): Promise<Map<number, number> | null> {
    this.banner = null;
    let doc;
    try {
      doc = await this.api.coloredHint(this.session.id, target);
    } catch (err) {
      if (err instanceof UnsolvableError) {
        this.hintCounts.clear();
        this.banner = { kind: "unsolvable", residual: err.residual };
        return null;
      }
      throw err;
    }
    this.hintCounts.clear();
    doc.counts.forEach((count, v) => {
      if (count > 0) {
        this.hintCounts.set(v, count);
      }
    });
    return new Map(this.hintCounts);
  }
}
