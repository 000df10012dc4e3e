"""Simple graphs: construction, generators, Cayley graphs, automorphisms.

Vertices are always 0-indexed integers.  Undirected edges are stored as
ordered pairs ``(u, v)`` with ``u < v``; directed edges as ``(tail, head)``.
Loops and duplicate edges are rejected everywhere.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .f2linalg import BitMatrix, BitVector

__all__ = [
    "Graph",
    "DegreeParity",
    "Permutation",
    "adjacency_matrix",
    "path_graph",
    "cycle_graph",
    "grid_graph",
    "torus_graph",
    "complete_graph",
    "generate",
    "cayley",
    "degree_parity",
    "is_automorphism",
    "apply_permutation",
    "graph_to_json",
    "graph_from_json",
]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph (no loops, no parallel edges)."""

    n: int
    edges: frozenset[tuple[int, int]]
    directed: bool = False

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), directed: bool = False):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = set()
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            normalized.add((u, v) if directed or u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "directed", bool(directed))

    def has_edge(self, u: int, v: int) -> bool:
        if self.directed:
            return (u, v) in self.edges
        return (min(u, v), max(u, v)) in self.edges if u != v else False

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of ``v`` (undirected graphs only)."""
        if self.directed:
            raise ValueError("neighbors() is defined for undirected graphs")
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def num_edges(self) -> int:
        return len(self.edges)


class DegreeParity(Enum):
    ALL_EVEN_OR_ZERO = "all-even-or-zero"
    ALL_ODD = "all-odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1; ``mapping[i]`` is the image of vertex ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(n)):
            raise ValueError("mapping is not a bijection on 0..n-1")

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))


def adjacency_matrix(g: Graph) -> BitMatrix:
    """Adjacency matrix over GF(2); for directed graphs A[tail][head] = 1."""
    rows = [0] * g.n
    for u, v in g.edges:
        rows[u] |= 1 << v
        if not g.directed:
            rows[v] |= 1 << u
    return BitMatrix(g.n, g.n, tuple(rows))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols lattice, row-major vertex numbering."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def torus_graph(rows: int, cols: int) -> Graph:
    """Grid with both axes wrapped; each axis must be a genuine cycle."""
    if rows < 3 or cols < 3:
        raise ValueError("torus dimensions must be at least three")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            edges.append((v, i * cols + (j + 1) % cols))
            edges.append((v, ((i + 1) % rows) * cols + j))
    return Graph(rows * cols, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


_SPEC_RE = re.compile(r"^(path|cycle|complete):(\d+)$|^(grid|torus):(\d+)x(\d+)$")


def generate(spec: str) -> Graph:
    """Build a named family member from a compact spec string.

    Grammar: ``path:5``, ``cycle:4``, ``grid:5x5``, ``torus:4x4``,
    ``complete:6``.
    """
    m = _SPEC_RE.match(spec.strip())
    if not m:
        raise ValueError(f"unrecognised graph spec {spec!r}")
    if m.group(1):
        kind, n = m.group(1), int(m.group(2))
        if kind == "path":
            return path_graph(n)
        if kind == "cycle":
            return cycle_graph(n)
        return complete_graph(n)
    kind, r, c = m.group(3), int(m.group(4)), int(m.group(5))
    return grid_graph(r, c) if kind == "grid" else torus_graph(r, c)


# ---------------------------------------------------------------------------
# Cayley graphs
# ---------------------------------------------------------------------------

_ASSOCIATIVITY_FULL_CHECK_LIMIT = 64
_ASSOCIATIVITY_SAMPLES = 4096


def cayley(table: Sequence[Sequence[int]], generators: Iterable[int]) -> Graph:
    """Cayley graph of the group given by ``table`` on a symmetric set.

    ``table[g][h]`` is the product g*h over element indices 0..n-1.  The
    table is validated: an identity must exist, every row and column must
    be a permutation, and associativity is checked exhaustively for
    n <= 64 (sampled with a fixed seed above that).  The generating set
    must exclude the identity and be closed under inverses; the resulting
    edges are {g, g*s}.
    """
    n = len(table)
    if n == 0:
        raise ValueError("empty multiplication table")
    rows = [tuple(int(x) for x in row) for row in table]
    for row in rows:
        if len(row) != n:
            raise ValueError("multiplication table is not square")
        if any(not 0 <= x < n for x in row):
            raise ValueError("table entry out of range")

    full = list(range(n))
    identity = None
    for e in range(n):
        if list(rows[e]) == full and all(rows[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise ValueError("table has no identity element")

    for g in range(n):
        if sorted(rows[g]) != full:
            raise ValueError(f"row {g} is not a permutation")
        if sorted(rows[h][g] for h in range(n)) != full:
            raise ValueError(f"column {g} is not a permutation")

    if n <= _ASSOCIATIVITY_FULL_CHECK_LIMIT:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(0)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(_ASSOCIATIVITY_SAMPLES)
        )
    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise ValueError(f"table is not associative at ({a}, {b}, {c})")

    inverse = [0] * n
    for g in range(n):
        inverse[g] = rows[g].index(identity)

    gens = sorted(set(int(s) for s in generators))
    if not gens:
        raise ValueError("generating set is empty")
    for s in gens:
        if not 0 <= s < n:
            raise ValueError(f"generator {s} out of range")
        if s == identity:
            raise ValueError("identity cannot be a generator")
        if inverse[s] not in gens:
            raise ValueError(f"generating set is not symmetric: missing inverse of {s}")

    edges = {(min(g, rows[g][s]), max(g, rows[g][s])) for g in range(n) for s in gens}
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# degree parity and automorphisms
# ---------------------------------------------------------------------------


def degree_parity(g: Graph) -> DegreeParity:
    """Classify the multiset of vertex degrees by parity."""
    if g.directed:
        raise ValueError("degree parity is defined for undirected graphs")
    degs = [0] * g.n
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    if all(d % 2 == 0 for d in degs):
        return DegreeParity.ALL_EVEN_OR_ZERO
    if all(d % 2 == 1 for d in degs):
        return DegreeParity.ALL_ODD
    return DegreeParity.MIXED


def is_automorphism(g: Graph, p: Permutation) -> bool:
    """Whether ``p`` maps the edge set of ``g`` onto itself."""
    if len(p) != g.n:
        raise ValueError(f"permutation on {len(p)} points, graph has {g.n} vertices")
    if g.directed:
        mapped = {(p(u), p(v)) for u, v in g.edges}
    else:
        mapped = {(min(p(u), p(v)), max(p(u), p(v))) for u, v in g.edges}
    return mapped == g.edges


def apply_permutation(p: Permutation, x: BitVector) -> BitVector:
    """Relabel the coordinates of ``x``: the result has x[i] at position p(i)."""
    if len(p) != x.n:
        raise ValueError(f"permutation on {len(p)} points, vector of length {x.n}")
    bits = 0
    for i in range(x.n):
        if (x.bits >> i) & 1:
            bits |= 1 << p(i)
    return BitVector(x.n, bits)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {
        "n": g.n,
        "directed": g.directed,
        "edges": sorted([u, v] for u, v in g.edges),
    }


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("graph document must be a JSON object")
    try:
        n = int(data["n"])
        edges = data.get("edges", [])
        directed = bool(data.get("directed", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from exc
    return Graph(n, edges, directed=directed)
