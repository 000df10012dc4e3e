/** Wire types of the lightsout REST service. */

export interface GraphDoc {
  n: number;
  directed: boolean;
  edges: Array<[number, number]>;
}

/** A GF(2) game session: states are bitstrings, leftmost char = vertex 0. */
export interface GfSessionDoc {
  id: string;
  kind: "gf2";
  graph: GraphDoc;
  variant: string;
  n: number;
  state: string;
  initial: string;
  history: number[];
  solvable: boolean;
}

/** A k-colored session: states are per-vertex color indices. */
export interface ColoredSessionDoc {
  id: string;
  kind: "colored";
  graph: GraphDoc;
  variant: "classic";
  n: number;
  k: number;
  state: number[];
  initial: number[];
  history: number[];
  solvable: boolean;
}

export type SessionDoc = GfSessionDoc | ColoredSessionDoc;

export interface CreateGameRequest {
  graph: string | GraphDoc;
  variant?: string;
  initial?: string | number[];
  k?: number;
}

export type HintMode = "any" | "min";

export interface GfHintDoc {
  presses: string;
  weight: number;
  coset_size?: number;
}

export interface ColoredHintDoc {
  k: number;
  counts: number[];
  total: number;
}

export interface InvariantDoc {
  rows: string[];
  value: string;
}
