"""The press game itself: rule matrices, reachability, invariants, special states.

A game on a simple graph works on GF(2) states indexed by vertex.  Pressing
button ``j`` adds column ``j`` of the rule matrix ``M`` to the state, so a
press multiset ``a`` moves ``i`` to ``i + M a`` and reachability is exactly
membership of ``i + f`` in the column space of ``M``.

Variants differ only in how ``M`` is built from the adjacency matrix ``A``:

* classic          — ``M = A + I`` (press toggles the closed neighborhood)
* second           — ``M = A^2 + I`` when every degree is even or zero,
                     ``M = A^2`` when every degree is odd
* neighborhood     — ``M = A + A^2`` when every degree is odd,
                     ``M = A + A^2 + I`` when every degree is even or zero
* nonreflexive     — ``M = A + D`` for a chosen 0/1 diagonal ``D``
* asymmetric       — ``M = (A + I)^T`` on a directed graph

The two parity-gated variants refuse mixed-parity graphs: their derived
neighborhoods only form a loop-free graph when the degree parity is uniform.

Each compiled game carries the invariant matrix ``J`` whose rows are the
canonical kernel basis of ``M^T``; two states are mutually reachable exactly
when ``J i == J f``, and ``J`` never changes under presses.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .f2linalg import BitMatrix, BitVector, kernel_basis, solve
from .graph import (
    DegreeParity,
    Graph,
    Permutation,
    adjacency_matrix,
    apply_permutation,
    degree_parity,
    is_automorphism,
)

__all__ = [
    "Variant",
    "CLASSIC",
    "SECOND_NEIGHBORS",
    "NEIGHBORHOOD",
    "ASYMMETRIC",
    "non_reflexive",
    "parse_variant",
    "GameSpec",
    "Solution",
    "SpecialKind",
    "UnsupportedGraphError",
    "UnsupportedVariantError",
    "compile_game",
    "press",
    "apply_buttons",
    "equivalent",
    "invariant_value",
    "solve_game",
    "find_special",
    "enumerate_special",
    "check_closure",
    "map_special_set",
    "diagonal_reachability",
]

ENUMERATION_CAP = 1 << 20  # hard ceiling on solution sets materialised in memory


class UnsupportedGraphError(ValueError):
    """The graph cannot host the requested variant (mixed degree parity)."""


class UnsupportedVariantError(ValueError):
    """The operation is only defined for a different variant."""


@dataclass(frozen=True)
class Variant:
    """Game variant tag; ``diag_mask`` is only used by ``nonreflexive``."""

    kind: str
    diag_mask: Optional[BitVector] = None

    _KINDS = ("classic", "second", "neighborhood", "nonreflexive", "asymmetric")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown variant {self.kind!r}")
        if (self.kind == "nonreflexive") != (self.diag_mask is not None):
            raise ValueError("exactly the nonreflexive variant takes a diagonal mask")

    def __str__(self) -> str:
        if self.kind == "nonreflexive":
            return f"nonreflexive:{self.diag_mask.to_string()}"
        return self.kind


CLASSIC = Variant("classic")
SECOND_NEIGHBORS = Variant("second")
NEIGHBORHOOD = Variant("neighborhood")
ASYMMETRIC = Variant("asymmetric")


def non_reflexive(diag_mask: BitVector) -> Variant:
    return Variant("nonreflexive", diag_mask)


def parse_variant(text: str) -> Variant:
    """Parse the command-line variant grammar, e.g. ``nonreflexive:101``."""
    if text in ("classic", "second", "neighborhood", "asymmetric"):
        return Variant(text)
    if text.startswith("nonreflexive:"):
        return non_reflexive(BitVector.from_string(text.split(":", 1)[1]))
    raise ValueError(f"unknown variant {text!r}")


class SpecialKind(Enum):
    INVERTING = "inverting"
    SELF_REPRODUCING = "self-reproducing"
    SELF_AVOIDING = "self-avoiding"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class Solution:
    """A press assignment; over GF(2) only the 0/1 multiplicity matters."""

    presses: BitVector

    @property
    def weight(self) -> int:
        return self.presses.weight()

    def to_json(self) -> dict:
        return {"presses": self.presses.to_string(), "weight": self.weight}


@dataclass(frozen=True)
class GameSpec:
    """A compiled game: graph, variant, rule matrix and invariant matrix."""

    graph: Graph
    variant: Variant
    rule: BitMatrix  # n x n over GF(2)
    invariant: BitMatrix  # (n - rank) x n; rows form the canonical basis of ker(rule^T)

    @property
    def n(self) -> int:
        return self.graph.n


def _diag_matrix(mask: BitVector) -> BitMatrix:
    return BitMatrix(mask.n, mask.n, tuple(((mask.bits >> i) & 1) << i for i in range(mask.n)))


def compile_game(g: Graph, variant: Variant) -> GameSpec:
    """Build the rule matrix and invariant matrix for a graph/variant pair.

    Raises ``UnsupportedGraphError`` when a parity-gated variant meets a
    graph of mixed degree parity, and ``ValueError`` when the orientation
    of the graph does not match the variant.
    """
    if variant.kind == "asymmetric":
        if not g.directed:
            raise ValueError("the asymmetric variant needs a directed graph")
    elif g.directed:
        raise ValueError(f"variant {variant.kind!r} needs an undirected graph")

    a = adjacency_matrix(g)
    identity = BitMatrix.identity(g.n)

    if variant.kind == "classic":
        rule = a + identity
    elif variant.kind in ("second", "neighborhood"):
        parity = degree_parity(g)
        if parity is DegreeParity.MIXED:
            raise UnsupportedGraphError(
                f"variant {variant.kind!r} needs uniform degree parity, got mixed"
            )
        a2 = a @ a
        if variant.kind == "second":
            rule = a2 + identity if parity is DegreeParity.ALL_EVEN_OR_ZERO else a2
        else:
            rule = a + a2 if parity is DegreeParity.ALL_ODD else a + a2 + identity
        # The derived neighborhood graph rule + I must be loop-free, i.e. the
        # rule matrix carries an all-ones diagonal.  Uniform parity guarantees
        # this; a failure here would be an internal inconsistency.
        if rule.diagonal().weight() != g.n:
            raise RuntimeError("derived neighborhood graph acquired a loop")
    elif variant.kind == "nonreflexive":
        mask = variant.diag_mask
        if mask.n != g.n:
            raise ValueError(f"diagonal mask has length {mask.n}, graph has {g.n} vertices")
        rule = a + _diag_matrix(mask)
    else:  # asymmetric
        rule = (a + identity).transpose()

    invariant = BitMatrix.from_row_vectors(kernel_basis(rule.transpose()), cols=g.n)
    return GameSpec(g, variant, rule, invariant)


# ---------------------------------------------------------------------------
# play and reachability
# ---------------------------------------------------------------------------


def press(spec: GameSpec, x: BitVector, j: int) -> BitVector:
    """State after pressing button ``j``: add column ``j`` of the rule matrix."""
    if not 0 <= j < spec.n:
        raise ValueError(f"button {j} out of range for {spec.n} vertices")
    if x.n != spec.n:
        raise ValueError(f"state length {x.n} does not match {spec.n} vertices")
    return x ^ spec.rule.column(j)


def apply_buttons(spec: GameSpec, x: BitVector, a: BitVector) -> BitVector:
    """State after pressing every button in the support of ``a`` (order irrelevant)."""
    if a.n != spec.n:
        raise ValueError(f"press vector length {a.n} does not match {spec.n} vertices")
    return x ^ spec.rule.mul_vec(a)


def invariant_value(spec: GameSpec, x: BitVector) -> BitVector:
    """The conserved quantity ``J x``; presses never change it."""
    return spec.invariant.mul_vec(x)


def equivalent(spec: GameSpec, i: BitVector, f: BitVector) -> bool:
    """Whether ``f`` is reachable from ``i`` (equivalently ``J i == J f``)."""
    return invariant_value(spec, i) == invariant_value(spec, f)


def solve_game(spec: GameSpec, i: BitVector, f: BitVector) -> Optional[Solution]:
    """Canonical press set moving ``i`` to ``f``, or ``None`` when unreachable."""
    if i.n != spec.n or f.n != spec.n:
        raise ValueError("state length does not match the game")
    x = solve(spec.rule, i ^ f)
    return None if x is None else Solution(x)


# ---------------------------------------------------------------------------
# special states (classic variant only)
# ---------------------------------------------------------------------------


def _special_system(spec: GameSpec, kind: SpecialKind) -> tuple[BitMatrix, BitVector]:
    """Matrix and right-hand side whose solutions are the states of ``kind``."""
    if spec.variant.kind != "classic":
        raise UnsupportedVariantError(
            f"special states are defined for the classic variant, not {spec.variant.kind!r}"
        )
    a = adjacency_matrix(spec.graph)
    n = spec.n
    if kind is SpecialKind.INVERTING:
        return spec.rule, BitVector.ones(n)
    if kind is SpecialKind.SELF_REPRODUCING:
        return a, BitVector.zeros(n)
    if kind is SpecialKind.SELF_AVOIDING:
        return a, BitVector.ones(n)
    if kind is SpecialKind.NEUTRAL:
        return spec.rule, BitVector.zeros(n)
    raise ValueError(f"unknown special kind {kind!r}")


def find_special(spec: GameSpec, kind: SpecialKind) -> Optional[BitVector]:
    """One witness state of the requested kind, or ``None`` if none exists.

    Inverting states always exist for the classic game (the rule matrix is
    symmetric with an all-ones diagonal, which forces the all-ones vector
    into its image).  For the two homogeneous kinds the witness must be
    nonzero, so the first canonical kernel basis vector is returned.
    """
    m, b = _special_system(spec, kind)
    if b.is_zero():
        basis = kernel_basis(m)
        return basis[0] if basis else None
    x = solve(m, b)
    if kind is SpecialKind.INVERTING and x is None:
        raise RuntimeError("classic games always admit an inverting state")
    return x


def enumerate_special(spec: GameSpec, kind: SpecialKind) -> list[BitVector]:
    """The full solution set of the defining system, sorted by packed value.

    Homogeneous kinds include the zero state here (pressing nothing).  The
    set size is ``2^(kernel dimension)``; anything beyond ``ENUMERATION_CAP``
    elements is refused rather than materialised.
    """
    m, b = _special_system(spec, kind)
    x0 = solve(m, b)
    if x0 is None:
        return []
    basis = kernel_basis(m)
    if 1 << len(basis) > ENUMERATION_CAP:
        raise ValueError(
            f"solution set has 2^{len(basis)} elements, above the cap of {ENUMERATION_CAP}"
        )
    out = [x0.bits]
    for v in basis:
        out += [x ^ v.bits for x in out]
    return [BitVector(spec.n, bits) for bits in sorted(out)]


_CLOSURE_RULES = (
    # (predicate over kind counts, expected kind of the sum)
    (
        lambda c: c[SpecialKind.SELF_AVOIDING] % 2 == 0
        and c[SpecialKind.INVERTING] == c[SpecialKind.SELF_REPRODUCING] == c[SpecialKind.NEUTRAL] == 0,
        SpecialKind.SELF_REPRODUCING,
    ),
    (
        lambda c: c[SpecialKind.INVERTING] == c[SpecialKind.SELF_AVOIDING] == c[SpecialKind.NEUTRAL] == 0,
        SpecialKind.SELF_REPRODUCING,
    ),
    (
        lambda c: c[SpecialKind.INVERTING] == c[SpecialKind.SELF_AVOIDING] == c[SpecialKind.SELF_REPRODUCING] == 0,
        SpecialKind.NEUTRAL,
    ),
    (
        lambda c: c[SpecialKind.SELF_AVOIDING] == 1
        and c[SpecialKind.INVERTING] == c[SpecialKind.NEUTRAL] == 0,
        SpecialKind.SELF_AVOIDING,
    ),
    (
        lambda c: c[SpecialKind.NEUTRAL] == 1
        and c[SpecialKind.INVERTING] % 2 == 0
        and c[SpecialKind.SELF_AVOIDING] == c[SpecialKind.SELF_REPRODUCING] == 0,
        SpecialKind.NEUTRAL,
    ),
)


def _satisfies(spec: GameSpec, kind: SpecialKind, x: BitVector) -> bool:
    m, b = _special_system(spec, kind)
    return m.mul_vec(x) == b


def check_closure(spec: GameSpec, witnesses: Sequence[tuple[SpecialKind, BitVector]]) -> bool:
    """Verify the closure laws of the special kinds on concrete witnesses.

    Every witness must satisfy its own tag's defining system.  The sum of
    the witnesses is then checked against each closure law whose shape the
    tag multiset matches:

    1. a sum of an even number of self-avoiding states is self-reproducing;
    2. any sum of self-reproducing states is self-reproducing;
    3. any sum of neutral states is neutral;
    4. one self-avoiding state plus self-reproducing states is self-avoiding;
    5. one neutral state plus an even number of inverting states is neutral.

    Returns ``False`` on any violation — which would indicate a bug, so this
    is a tool for the property suite rather than for end users.
    """
    for kind, x in witnesses:
        if not _satisfies(spec, kind, x):
            return False
    total = BitVector.zeros(spec.n)
    for _, x in witnesses:
        total ^= x
    counts = Counter(kind for kind, _ in witnesses)
    for matches, expected in _CLOSURE_RULES:
        if matches(counts) and not _satisfies(spec, expected, total):
            return False
    return True


def map_special_set(spec: GameSpec, x: BitVector, p: Permutation) -> BitVector:
    """Push a state through a graph automorphism; the special kind is preserved."""
    if not is_automorphism(spec.graph, p):
        raise ValueError("permutation is not an automorphism of the game graph")
    return apply_permutation(p, x)


def diagonal_reachability(spec: GameSpec) -> Solution:
    """Press set producing the diagonal state of a nonreflexive game from all-off.

    The diagonal vector (the chosen self-toggle mask) always lies in the
    image of ``A + D``, so this never fails on a compiled game.
    """
    if spec.variant.kind != "nonreflexive":
        raise UnsupportedVariantError("diagonal reachability concerns the nonreflexive variant")
    d = spec.variant.diag_mask
    x = solve(spec.rule, d)
    if x is None:
        raise RuntimeError("diagonal state escaped the image of the rule matrix")
    return Solution(x)
