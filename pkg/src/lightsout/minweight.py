"""Minimum-weight press searches and weight-preserving problem reductions.

Finding the fewest presses means finding the lightest vector in a coset
``x0 + ker M``.  That is as hard as minimum-distance decoding in general,
so this module does the honest thing: it enumerates the whole coset, in
Gray-code order so that consecutive candidates differ by a single basis
vector and each step costs one XOR and one popcount.

The coset has ``2^(cols - rank)`` elements.  Anything larger than the
caller's budget raises ``BudgetExceededError`` — deliberately distinct
from the ``None`` that means "no solution at all".

Ties between equally light solutions go to the smallest packed integer,
i.e. the candidate whose lowest-index differing coordinate is 0.  Two
shortcuts that cannot disturb exactness: a zero particular solution is
returned immediately, and all weight-1 candidates are scanned (in packed
order) before the walk starts.

``pad_balanced`` and ``symmetrize`` rewrite rectangular or asymmetric
instances as square/symmetric ones with the same solution weights, so a
solver for the symmetric square case loses no generality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .f2linalg import BitMatrix, BitVector, kernel_basis, solve

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "MinWeightResult",
    "min_weight_solution",
    "min_weight_kernel_vector",
    "pad_balanced",
    "symmetrize",
]

DEFAULT_BUDGET = 1 << 24


class BudgetExceededError(RuntimeError):
    """The coset is too large to enumerate within the given budget."""

    def __init__(self, coset_size: int, budget: int):
        super().__init__(f"coset of size {coset_size} exceeds the budget of {budget}")
        self.coset_size = coset_size
        self.budget = budget


@dataclass(frozen=True)
class MinWeightResult:
    solution: BitVector
    weight: int
    coset_size: int

    def to_json(self) -> dict:
        return {
            "presses": self.solution.to_string(),
            "weight": self.weight,
            "coset_size": self.coset_size,
        }


def _walk_minimum(start: int, basis: list[int], skip_zero: bool) -> int:
    """Gray-code walk over ``start + span(basis)``; returns the packed minimum.

    Candidates are ranked by (weight, packed value).  With ``skip_zero``
    the zero vector is ignored (it is visited at most once, since the
    basis is independent).
    """
    best = start
    best_w = start.bit_count() if start or not skip_zero else None
    cur = start
    for t in range(1, 1 << len(basis)):
        cur ^= basis[(t & -t).bit_length() - 1]
        if skip_zero and cur == 0:
            continue
        w = cur.bit_count()
        if best_w is None or w < best_w or (w == best_w and cur < best):
            best, best_w = cur, w
    return best


def min_weight_solution(
    m: BitMatrix, c: BitVector, budget: int = DEFAULT_BUDGET
) -> Optional[MinWeightResult]:
    """Lightest press vector with ``m @ x == c``, or ``None`` if unsolvable.

    Exact: enumerates the full solution coset (Gray-code order) unless a
    weight-0 or weight-1 solution settles the matter first.  Raises
    ``BudgetExceededError`` when the coset size exceeds ``budget``.
    """
    x0 = solve(m, c)
    if x0 is None:
        return None
    kern = kernel_basis(m)
    coset_size = 1 << len(kern)
    if coset_size > budget:
        raise BudgetExceededError(coset_size, budget)

    if x0.bits == 0:
        return MinWeightResult(x0, 0, coset_size)
    for j in range(m.cols):  # ascending packed order: first hit wins ties
        bit = 1 << j
        if all(((r >> j) & 1) == ((c.bits >> i) & 1) for i, r in enumerate(m.row_data)):
            return MinWeightResult(BitVector(m.cols, bit), 1, coset_size)

    best = _walk_minimum(x0.bits, [v.bits for v in kern], skip_zero=False)
    return MinWeightResult(BitVector(m.cols, best), best.bit_count(), coset_size)


def min_weight_kernel_vector(
    a: BitMatrix, budget: int = DEFAULT_BUDGET
) -> Optional[MinWeightResult]:
    """Lightest nonzero vector of ``ker a`` for square ``a`` (``None`` if trivial)."""
    if a.rows != a.cols:
        raise ValueError("kernel search expects a square matrix")
    kern = kernel_basis(a)
    if not kern:
        return None
    span_size = 1 << len(kern)
    if span_size > budget:
        raise BudgetExceededError(span_size, budget)

    for j in range(a.cols):  # weight-1 kernel vectors are zero columns
        if all(((r >> j) & 1) == 0 for r in a.row_data):
            return MinWeightResult(BitVector(a.cols, 1 << j), 1, span_size)

    best = _walk_minimum(0, [v.bits for v in kern], skip_zero=True)
    return MinWeightResult(BitVector(a.cols, best), best.bit_count(), span_size)


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------


def pad_balanced(a: BitMatrix, y: BitVector) -> tuple[BitMatrix, BitVector]:
    """Square up a rectangular system without changing solution weights.

    Wide systems gain zero rows (and zero-padded right-hand sides): the new
    equations read 0 == 0.  Tall systems gain zero columns: the new
    variables touch nothing, and any weight-minimal solution leaves them
    unset.
    """
    if y.n != a.rows:
        raise ValueError(f"right-hand side length {y.n} does not match {a.rows} rows")
    m, n = a.rows, a.cols
    if m == n:
        return a, y
    if n < m:  # tall: add zero columns
        return BitMatrix(m, m, a.row_data), y
    # wide: add zero rows and extend the right-hand side with zeros
    return BitMatrix(n, n, a.row_data + (0,) * (n - m)), BitVector(n, y.bits)


def symmetrize(a: BitMatrix, y: BitVector) -> tuple[BitMatrix, BitVector]:
    """Fold a square system into a symmetric one of doubled size.

    The block matrix ``[[0, A^T], [A, 0]]`` with right-hand side ``(0 | y)``
    forces its solutions ``(u | v)`` to satisfy ``A u == y`` and
    ``A^T v == 0``; a minimal solution takes ``v == 0``, so the minimum
    weight is untouched.
    """
    if a.rows != a.cols:
        raise ValueError("symmetrize expects a square matrix")
    if y.n != a.rows:
        raise ValueError(f"right-hand side length {y.n} does not match {a.rows} rows")
    n = a.rows
    top = tuple(col.bits << n for col in (a.column(j) for j in range(n)))
    bottom = a.row_data
    doubled = BitMatrix(2 * n, 2 * n, top + bottom)
    return doubled, BitVector(2 * n, y.bits << n)
