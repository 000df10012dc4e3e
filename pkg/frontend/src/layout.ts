/** Board layout: recognize lattice and torus graphs, fall back to a circle.
 *
 * The server sends plain graph JSON, so grid shape is *detected* from the
 * edge set rather than trusted from the generator spec: a graph lays out
 * as r rows x c columns exactly when its edges are precisely the lattice
 * adjacencies under row-major numbering, optionally with the wrap-around
 * edges that close each row and column into a cycle (a torus; both
 * dimensions must be at least 3 for the wraps to be simple edges).
 * Anything else (cycles, Cayley graphs, ...) is placed on a circle.
 */

import type { GraphDoc } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

function edgeKey(u: number, v: number): string {
  return u < v ? `${u}-${v}` : `${v}-${u}`;
}

function latticeEdges(rows: number, cols: number, wrap: boolean): string[] {
  const keys: string[] = [];
  for (let i = 0; i < rows; i++) {
    for (let j = 0; j < cols; j++) {
      const v = i * cols + j;
      if (j + 1 < cols) keys.push(edgeKey(v, v + 1));
      if (i + 1 < rows) keys.push(edgeKey(v, v + cols));
    }
  }
  if (wrap) {
    for (let i = 0; i < rows; i++) {
      keys.push(edgeKey(i * cols + cols - 1, i * cols));
    }
    for (let j = 0; j < cols; j++) {
      keys.push(edgeKey((rows - 1) * cols + j, j));
    }
  }
  return keys;
}

/** Detect an r x c lattice or torus; prefers the most-square factorization. */
export function gridDimensions(graph: GraphDoc): [number, number] | null {
  if (graph.directed || graph.n === 0) {
    return null;
  }
  const present = new Set(graph.edges.map(([u, v]) => edgeKey(u, v)));
  const candidates: Array<[number, number]> = [];
  for (let rows = 1; rows <= graph.n; rows++) {
    if (graph.n % rows === 0) {
      candidates.push([rows, graph.n / rows]);
    }
  }
  // most-square first; row-major numbering makes r x c and c x r distinct
  candidates.sort((a, b) => Math.abs(a[0] - a[1]) - Math.abs(b[0] - b[1]));
  for (const [rows, cols] of candidates) {
    const flat = latticeEdges(rows, cols, false);
    if (flat.length === present.size && flat.every((k) => present.has(k))) {
      return [rows, cols];
    }
    if (rows >= 3 && cols >= 3) {
      const wrapped = latticeEdges(rows, cols, true);
      if (wrapped.length === present.size && wrapped.every((k) => present.has(k))) {
        return [rows, cols];
      }
    }
  }
  return null;
}

/** Vertex positions normalized to the unit square. */
export function positions(graph: GraphDoc): Point[] {
  const n = graph.n;
  if (n === 0) {
    return [];
  }
  const dims = gridDimensions(graph);
  if (dims !== null) {
    const [rows, cols] = dims;
    const pts: Point[] = [];
    for (let v = 0; v < n; v++) {
      const i = Math.floor(v / cols);
      const j = v % cols;
      pts.push({
        x: cols === 1 ? 0.5 : j / (cols - 1),
        y: rows === 1 ? 0.5 : i / (rows - 1),
      });
    }
    return pts;
  }
  if (n === 1) {
    return [{ x: 0.5, y: 0.5 }];
  }
  const pts: Point[] = [];
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n - Math.PI / 2;
    pts.push({ x: 0.5 + 0.5 * Math.cos(angle), y: 0.5 + 0.5 * Math.sin(angle) });
  }
  return pts;
}
