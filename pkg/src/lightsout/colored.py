"""The k-colored game: presses add one to a closed neighborhood modulo k.

Everything lives over Z_k, which is a ring but usually not a field, so two
solver routes exist:

* ``solve_squarefree`` — factor k into distinct primes, solve each system
  over the field Z_p, and recombine the per-prime answers with Bezout
  coefficients.  Only valid for squarefree k.
* ``solve_general`` — works for every k by reading the system
  ``N a = c (mod k)`` as the integer system ``(N | kI) y = c`` and solving
  that through the Smith normal form.

Both return press counts reduced into [0, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph
from .zlinalg import IntMatrix, ext_gcd, smith_normal_form, solve_mod_p

__all__ = [
    "ColoredState",
    "PressCounts",
    "MAX_MODULUS",
    "rule_matrix",
    "press_colored",
    "apply_colored",
    "solve_squarefree",
    "solve_general",
    "solvable_colored",
    "state_to_json",
    "state_from_json",
]

MAX_MODULUS = 1 << 32  # keeps trial-division factorization honest


@dataclass(frozen=True)
class ColoredState:
    """Per-vertex color indices in [0, k)."""

    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 2 <= self.k < MAX_MODULUS:
            raise ValueError(f"color count must be in [2, 2^32), got {self.k}")
        if any(not 0 <= v < self.k for v in self.values):
            raise ValueError("color values must lie in [0, k)")

    @classmethod
    def uniform(cls, k: int, n: int, value: int = 0) -> "ColoredState":
        return cls(k, (value,) * n)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PressCounts:
    """Press multiplicities modulo k (order of presses never matters)."""

    k: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not 0 <= v < self.k for v in self.counts):
            raise ValueError("press counts must lie in [0, k)")

    def total(self) -> int:
        return sum(self.counts)


def rule_matrix(g: Graph) -> IntMatrix:
    """Closed-neighborhood matrix N = A + I with integer entries."""
    if g.directed:
        raise ValueError("the colored game plays on undirected graphs")
    rows = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        rows[v][v] = 1
    for u, v in g.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    return IntMatrix(g.n, g.n, tuple(tuple(r) for r in rows))


def _check_states(g: Graph, i: ColoredState, f: ColoredState) -> None:
    if g.directed:
        raise ValueError("the colored game plays on undirected graphs")
    if i.k != f.k:
        raise ValueError(f"color counts differ: {i.k} vs {f.k}")
    if len(i) != g.n or len(f) != g.n:
        raise ValueError("state length does not match the vertex count")


def press_colored(g: Graph, s: ColoredState, j: int) -> ColoredState:
    """Add one (mod k) to vertex j and each of its neighbors."""
    if g.directed:
        raise ValueError("the colored game plays on undirected graphs")
    if len(s) != g.n:
        raise ValueError("state length does not match the vertex count")
    if not 0 <= j < g.n:
        raise ValueError(f"button {j} out of range for {g.n} vertices")
    closed = set(g.neighbors(j)) | {j}
    return ColoredState(
        s.k, tuple((v + 1) % s.k if t in closed else v for t, v in enumerate(s.values))
    )


def apply_colored(g: Graph, s: ColoredState, a: PressCounts) -> ColoredState:
    """State after pressing button j exactly a.counts[j] times."""
    if a.k != s.k:
        raise ValueError(f"color counts differ: {a.k} vs {s.k}")
    if len(a.counts) != g.n or len(s) != g.n:
        raise ValueError("length does not match the vertex count")
    moved = rule_matrix(g).mul_vec(a.counts)
    return ColoredState(s.k, tuple((v + d) % s.k for v, d in zip(s.values, moved)))


def _trial_factor(k: int) -> list[tuple[int, int]]:
    """Prime factorization (p, exponent) by trial division; k < 2^32."""
    factors = []
    rest = k
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return factors


def solve_squarefree(g: Graph, i: ColoredState, f: ColoredState) -> Optional[PressCounts]:
    """Press counts moving i to f when k is a product of distinct primes.

    Solves one system per prime factor and recombines the answers: with
    k = p * (k/p) and r p + s (k/p) = 1, the term  b_p * s * (k/p)  agrees
    with b_p modulo p and vanishes modulo every other factor.  Raises
    ``ValueError`` for non-squarefree k; returns ``None`` when some prime
    component is unsolvable (and then no solution exists mod k at all).
    """
    _check_states(g, i, f)
    k = i.k
    factors = _trial_factor(k)
    if any(e > 1 for _, e in factors):
        raise ValueError(f"{k} is not squarefree; use the general solver")
    n = rule_matrix(g)
    c = tuple((fv - iv) % k for iv, fv in zip(i.values, f.values))
    counts = [0] * g.n
    for p, _ in factors:
        b = solve_mod_p(n, tuple(x % p for x in c), p)
        if b is None:
            return None
        cofactor = k // p
        s_coeff = ext_gcd(p, cofactor).t  # r*p + s_coeff*cofactor == 1
        for j in range(g.n):
            counts[j] = (counts[j] + b[j] * s_coeff * cofactor) % k
    return PressCounts(k, tuple(counts))


def solve_general(g: Graph, i: ColoredState, f: ColoredState) -> Optional[PressCounts]:
    """Press counts moving i to f for arbitrary k, via the Smith normal form.

    The congruence ``N a = c (mod k)`` holds exactly when the integer
    system ``(N | kI) y = c`` does.  With U (N | kI) V in Smith form B,
    solve ``B z = U c`` entry by entry (zero diagonal entries demand zero
    right-hand sides, nonzero ones must divide exactly), set the free tail
    of z to zero, and read the presses off the first n coordinates of Vz.
    """
    _check_states(g, i, f)
    k = i.k
    n = g.n
    nm = rule_matrix(g)
    scaled = IntMatrix(n, n, tuple(tuple(k if r == c else 0 for c in range(n)) for r in range(n)))
    m = nm.hstack(scaled)
    snf = smith_normal_form(m)
    c = tuple((fv - iv) % k for iv, fv in zip(i.values, f.values))
    uc = snf.u.mul_vec(c)
    z = [0] * (2 * n)
    for d in range(n):
        dd = snf.diag.entry(d, d)
        if dd == 0:
            if uc[d]:
                return None
        else:
            q, r = divmod(uc[d], dd)
            if r:
                return None
            z[d] = q
    a = snf.v.mul_vec(z)
    return PressCounts(k, tuple(x % k for x in a[:n]))


def solvable_colored(g: Graph, i: ColoredState, f: ColoredState) -> bool:
    return solve_general(g, i, f) is not None


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def state_to_json(s: ColoredState) -> dict:
    return {"k": s.k, "values": list(s.values)}


def state_from_json(doc: dict) -> ColoredState:
    try:
        return ColoredState(int(doc["k"]), tuple(int(v) for v in doc["values"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed colored state: {exc}") from exc
