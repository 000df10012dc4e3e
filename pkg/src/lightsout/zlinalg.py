"""Exact integer linear algebra: Bezout coefficients, modular solving,
and the Smith normal form with recorded unimodular transforms.

Everything here runs on Python's arbitrary-precision integers, so entries
may swell freely during elimination without any loss of exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = [
    "IntMatrix",
    "ExtGcd",
    "SmithDecomposition",
    "ext_gcd",
    "is_prime",
    "solve_mod_p",
    "smith_normal_form",
    "determinant",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if not entries:
            raise ValueError("cannot infer the shape of an empty matrix")
        return cls(len(entries), len(entries[0]), entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ())

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"inner dimension mismatch: {self.cols} vs {other.rows}")
        cols = other.transpose().entries
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, out)

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError(f"expected a vector of length {self.cols}, got {len(v)}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix(
            self.rows,
            self.cols + other.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def map_mod(self, m: int) -> "IntMatrix":
        return IntMatrix(
            self.rows, self.cols, tuple(tuple(x % m for x in row) for row in self.entries)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class ExtGcd:
    """g = gcd(a, b) together with canonical coefficients s a + t b = g."""

    g: int
    s: int
    t: int


def ext_gcd(a: int, b: int) -> ExtGcd:
    """Extended Euclid with a deterministic choice of coefficients.

    The gcd is returned nonnegative.  Among all valid ``s`` (which differ
    by multiples of ``b/g``) the one of smallest absolute value is chosen;
    a tie is broken towards the representative in ``[0, |b|/g)``.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    if b == 0:
        return ExtGcd(abs(a), 1 if a > 0 else -1, 0)
    if a == 0:
        return ExtGcd(abs(b), 0, 1 if b > 0 else -1)

    old_r, r = a, b
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    g, best_s = old_r, old_s
    if g < 0:
        g, best_s = -g, -best_s

    period = abs(b) // g
    low = best_s % period  # representative in [0, period)
    # min() keeps the first argument on ties, i.e. the nonnegative choice
    best_s = min((low, low - period), key=abs)
    t = (g - best_s * a) // b
    return ExtGcd(g, best_s, t)


# ---------------------------------------------------------------------------
# primes and modular solving
# ---------------------------------------------------------------------------

# Deterministic Miller-Rabin witness set, valid for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test for n below ~3.3e24."""
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic witness range")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def solve_mod_p(m: IntMatrix, c: Sequence[int], p: int) -> Optional[tuple[int, ...]]:
    """Canonical solution of ``m x = c`` over the field Z_p, or ``None``.

    Gauss-Jordan elimination with the same conventions as the GF(2) solver:
    leftmost pivot column, topmost usable row, free variables zero.  Entries
    of the result lie in ``[0, p)``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if len(c) != m.rows:
        raise ValueError(f"expected a right-hand side of length {m.rows}, got {len(c)}")
    rows = [[x % p for x in row] + [b % p] for row, b in zip(m.entries, c)]
    pivot_cols = []
    pivot_row = 0
    for col in range(m.cols):
        src = next((r for r in range(pivot_row, m.rows) if rows[r][col]), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        inv = pow(rows[pivot_row][col], -1, p)
        rows[pivot_row] = [x * inv % p for x in rows[pivot_row]]
        for r in range(m.rows):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    if any(rows[r][m.cols] for r in range(pivot_row, m.rows)):
        return None
    x = [0] * m.cols
    for i, col in enumerate(pivot_cols):
        x[col] = rows[i][m.cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ original @ V == diag, with U and V unimodular.

    The diagonal of ``diag`` is nonnegative, each entry divides the next
    nonzero one, and zero entries are trailing.
    """

    u: IntMatrix
    diag: IntMatrix
    v: IntMatrix


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form by repeated pivoting on the smallest nonzero entry.

    The pivot is always the entry of minimal absolute value in the working
    submatrix (row-major tie break), which keeps intermediate growth mild
    and the procedure fully deterministic.
    """
    r, c = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_op(dst: int, src: int, q: int) -> None:  # row dst -= q * row src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def col_op(dst: int, src: int, q: int) -> None:  # col dst -= q * col src
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def smallest_pivot(t: int) -> Optional[tuple[int, int]]:
        best = None
        where = None
        for i in range(t, r):
            for j in range(t, c):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best, where = x, (i, j)
        return where

    for t in range(min(r, c)):
        while True:
            where = smallest_pivot(t)
            if where is None:
                break
            swap_rows(t, where[0])
            swap_cols(t, where[1])
            for i in range(t + 1, r):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
            if any(a[i][t] for i in range(t + 1, r)):
                continue  # a smaller remainder appeared below; re-pivot on it
            for j in range(t + 1, c):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
            if any(a[t][j] for j in range(t + 1, c)):
                continue
            # row and column are clear; enforce divisibility into the rest
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # pull the offending row up and start over
        if where is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    diag = IntMatrix(r, c, tuple(tuple(row) for row in a))
    return SmithDecomposition(
        IntMatrix(r, r, tuple(tuple(row) for row in u)),
        diag,
        IntMatrix(c, c, tuple(tuple(row) for row in v)),
    )


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
