"""Dense linear algebra over GF(2) on bit-packed vectors and matrices.

Vectors and matrix rows are stored as Python integers used as bitsets:
bit ``i`` holds coordinate ``i``, so vector addition is ``^`` and Hamming
weight is ``int.bit_count()``.  Row reduction therefore costs one integer
XOR per row operation regardless of width, which is what every routine
here leans on.

Conventions fixed across the package:

* ``row_reduce`` produces the *reduced* row echelon form together with an
  invertible ``transform`` satisfying ``transform @ m == reduced``.  Pivot
  selection is deterministic: leftmost unfinished column, topmost usable
  row.
* ``solve`` returns the canonical solution with every free variable set
  to zero, or ``None`` when the system is inconsistent.
* ``kernel_basis`` emits one basis vector per free column, ordered by the
  free column index, each with a 1 in its own free coordinate and zeros
  in the other free coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "BitVector",
    "BitMatrix",
    "EchelonForm",
    "row_reduce",
    "solve",
    "kernel_basis",
    "image_contains",
    "dot",
]


def _mask(width: int) -> int:
    return (1 << width) - 1


@dataclass(frozen=True)
class BitVector:
    """Fixed-length vector over GF(2); bit ``i`` of ``bits`` is coordinate ``i``."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits 0x{self.bits:x} do not fit in {self.n} coordinates")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, _mask(n))

    @classmethod
    def unit(cls, n: int, j: int) -> "BitVector":
        """Standard basis vector e_j."""
        if not 0 <= j < n:
            raise ValueError(f"coordinate {j} out of range for length {n}")
        return cls(n, 1 << j)

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"entry {v!r} is not a GF(2) scalar")
            bits |= v << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a bitstring whose leftmost character is coordinate 0."""
        if not all(c in "01" for c in text):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls.from_ints(int(c) for c in text)

    # -- basic queries --------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return (((self.bits >> i) & 1) for i in range(self.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.bits ^ other.bits)

    __add__ = __xor__  # addition and subtraction coincide over GF(2)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates, ascending."""
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def to_string(self) -> str:
        """Bitstring with coordinate 0 leftmost (inverse of ``from_string``)."""
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def to_ints(self) -> tuple[int, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return self.to_string()


def dot(x: BitVector, y: BitVector) -> int:
    """Bilinear form <x, y> = sum_i x_i y_i over GF(2)."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    return (x.bits & y.bits).bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2); ``row_data[i]`` packs row ``i`` with bit ``j`` = entry (i, j)."""

    rows: int
    cols: int
    row_data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.row_data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.row_data)}")
        for r in self.row_data:
            if r < 0 or r >> self.cols:
                raise ValueError(f"row 0x{r:x} does not fit in {self.cols} columns")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        """Build from an iterable of 0/1 entry rows (lists, tuples, ...)."""
        packed = []
        width = cols
        for row in rows:
            v = BitVector.from_ints(row)
            if width is None:
                width = v.n
            elif v.n != width:
                raise ValueError("ragged rows")
            packed.append(v.bits)
        if width is None:
            raise ValueError("cannot infer column count from an empty matrix")
        return cls(len(packed), width, tuple(packed))

    @classmethod
    def from_row_vectors(cls, rows: Sequence[BitVector], cols: Optional[int] = None) -> "BitMatrix":
        width = cols
        for v in rows:
            if width is None:
                width = v.n
            elif v.n != width:
                raise ValueError("ragged rows")
        if width is None:
            raise ValueError("cannot infer column count from an empty matrix")
        return cls(len(rows), width, tuple(v.bits for v in rows))

    # -- element access -------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.row_data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_data[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.row_data):
            bits |= ((r >> j) & 1) << i
        return BitVector(self.rows, bits)

    def diagonal(self) -> BitVector:
        k = min(self.rows, self.cols)
        bits = 0
        for i in range(k):
            bits |= ((self.row_data[i] >> i) & 1) << i
        return BitVector(k, bits)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.row_data]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(
            self.rows, self.cols, tuple(a ^ b for a, b in zip(self.row_data, other.row_data))
        )

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.row_data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product over GF(2)."""
        if v.n != self.cols:
            raise ValueError(f"expected vector of length {self.cols}, got {v.n}")
        bits = 0
        for i, r in enumerate(self.row_data):
            bits |= ((r & v.bits).bit_count() & 1) << i
        return BitVector(self.rows, bits)

    def mul_mat(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"inner dimension mismatch: {self.cols} vs {other.rows}")
        out = []
        for r in self.row_data:
            acc = 0
            rr = r
            while rr:
                low = rr & -rr
                acc ^= other.row_data[low.bit_length() - 1]
                rr ^= low
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            return self.mul_vec(other)
        if isinstance(other, BitMatrix):
            return self.mul_mat(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.row_data)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.row_data == self.transpose().row_data

    def __str__(self) -> str:
        return "\n".join(self.row(i).to_string() for i in range(self.rows))


@dataclass(frozen=True)
class EchelonForm:
    """Result of ``row_reduce``: ``transform @ original == reduced`` (RREF)."""

    reduced: BitMatrix
    rank: int
    pivot_cols: tuple[int, ...]
    transform: BitMatrix  # invertible, rows x rows


def row_reduce(m: BitMatrix) -> EchelonForm:
    """Reduced row echelon form with a recorded invertible row transform.

    Deterministic pivoting: scan columns left to right, take the topmost
    row at or below the current pivot row with a 1 in that column.
    """
    # Work on [M | I]; the right block becomes the transform.
    width = m.cols
    work = [r | (1 << (width + i)) for i, r in enumerate(m.row_data)]
    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(width):
        bit = 1 << col
        src = None
        for r in range(pivot_row, m.rows):
            if work[r] & bit:
                src = r
                break
        if src is None:
            continue
        work[pivot_row], work[src] = work[src], work[pivot_row]
        piv = work[pivot_row]
        for r in range(m.rows):
            if r != pivot_row and work[r] & bit:
                work[r] ^= piv
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    left_mask = _mask(width)
    reduced = BitMatrix(m.rows, width, tuple(r & left_mask for r in work))
    transform = BitMatrix(m.rows, m.rows, tuple(r >> width for r in work))
    return EchelonForm(reduced, pivot_row, tuple(pivot_cols), transform)


def solve(m: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Canonical solution of ``m @ x == b`` (free variables zero), or ``None``.

    The returned vector, when a solution exists, is the unique one whose
    coordinates vanish on every non-pivot column of the RREF of ``m``.
    """
    if b.n != m.rows:
        raise ValueError(f"expected right-hand side of length {m.rows}, got {b.n}")
    ech = row_reduce(m)
    c = ech.transform.mul_vec(b)
    if c.bits >> ech.rank:
        return None  # a zero row of the RREF meets a nonzero rhs entry
    x = 0
    for i, col in enumerate(ech.pivot_cols):
        if (c.bits >> i) & 1:
            x |= 1 << col
    return BitVector(m.cols, x)


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of the null space, one vector per free column, ascending.

    Basis vector for free column ``f`` has a 1 at ``f``, zeros at the other
    free columns, and pivot coordinates read off the RREF.  Returns
    ``cols - rank`` vectors (empty list for injective maps).
    """
    ech = row_reduce(m)
    pivots = set(ech.pivot_cols)
    reduced = ech.reduced.row_data
    basis: list[BitVector] = []
    for f in range(m.cols):
        if f in pivots:
            continue
        fbit = 1 << f
        bits = fbit
        for i, p in enumerate(ech.pivot_cols):
            if reduced[i] & fbit:
                bits |= 1 << p
        basis.append(BitVector(m.cols, bits))
    return basis


def image_contains(m: BitMatrix, b: BitVector) -> bool:
    """Whether ``b`` lies in the column space of ``m``."""
    return solve(m, b) is not None
