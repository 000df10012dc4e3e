"""Colored game: presses over Z_k, the two solver routes, and their agreement.

The reachability oracle enumerates all k^n press-count vectors, so it only
runs on tiny instances — which is exactly where solver bugs would hide.
"""

from __future__ import annotations

import random
from itertools import product

import pytest

from lightsout.colored import (
    ColoredState,
    PressCounts,
    apply_colored,
    press_colored,
    rule_matrix,
    solvable_colored,
    solve_general,
    solve_squarefree,
    state_from_json,
    state_to_json,
)
from lightsout.f2linalg import BitVector
from lightsout.game import CLASSIC, compile_game, equivalent
from lightsout.graph import Graph, complete_graph, cycle_graph, path_graph
from samplers import random_graph


def oracle_reachable(g: Graph, i: ColoredState, f: ColoredState) -> bool:
    """Try every press-count vector in Z_k^n."""
    n = rule_matrix(g)
    k = i.k
    target = tuple((fv - iv) % k for iv, fv in zip(i.values, f.values))
    for a in product(range(k), repeat=g.n):
        if tuple(x % k for x in n.mul_vec(a)) == target:
            return True
    return False


def zeros(k: int, n: int) -> ColoredState:
    return ColoredState.uniform(k, n)


class TestColoredState:
    def test_validation(self):
        with pytest.raises(ValueError):
            ColoredState(1, (0,))
        with pytest.raises(ValueError):
            ColoredState(3, (0, 3))
        with pytest.raises(ValueError):
            ColoredState(1 << 32, (0,))

    def test_json_round_trip(self):
        s = ColoredState(3, (0, 2, 1))
        assert state_to_json(s) == {"k": 3, "values": [0, 2, 1]}
        assert state_from_json(state_to_json(s)) == s
        with pytest.raises(ValueError):
            state_from_json({"k": 3})


class TestPressColored:
    def test_center_press_on_path(self):
        s = press_colored(path_graph(3), zeros(3, 3), 1)
        assert s.values == (1, 1, 1)
        s = press_colored(path_graph(3), s, 0)
        assert s.values == (2, 2, 1)

    def test_wraps_modulo_k(self):
        s = ColoredState(2, (1, 1, 1))
        assert press_colored(path_graph(3), s, 1).values == (0, 0, 0)

    def test_k_presses_cancel(self):
        rng = random.Random(0)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 7))
            k = rng.randint(2, 6)
            start = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            s = start
            j = rng.randrange(g.n)
            for _ in range(k):
                s = press_colored(g, s, j)
            assert s == start

    def test_apply_matches_repeated_presses(self):
        rng = random.Random(1)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 6))
            k = rng.randint(2, 5)
            start = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            counts = PressCounts(k, tuple(rng.randrange(k) for _ in range(g.n)))
            stepped = start
            for j, c in enumerate(counts.counts):
                for _ in range(c):
                    stepped = press_colored(g, stepped, j)
            assert apply_colored(g, start, counts) == stepped

    def test_rejects_directed_graphs(self):
        g = Graph(2, [(0, 1)], directed=True)
        with pytest.raises(ValueError):
            press_colored(g, zeros(3, 2), 0)


class TestSquarefreeSolver:
    def test_path_six_colors(self):
        g = path_graph(3)
        f = ColoredState(6, (1, 1, 1))
        a = solve_squarefree(g, zeros(6, 3), f)
        assert a == PressCounts(6, (0, 1, 0))
        assert apply_colored(g, zeros(6, 3), a) == f

    def test_triangle_single_bump_unsolvable(self):
        g = complete_graph(3)
        assert solve_squarefree(g, zeros(3, 3), ColoredState(3, (1, 0, 0))) is None
        assert not oracle_reachable(g, zeros(3, 3), ColoredState(3, (1, 0, 0)))

    def test_rejects_non_squarefree_modulus(self):
        with pytest.raises(ValueError, match="squarefree"):
            solve_squarefree(path_graph(2), zeros(4, 2), ColoredState(4, (1, 0)))
        with pytest.raises(ValueError, match="squarefree"):
            solve_squarefree(path_graph(2), zeros(12, 2), ColoredState(12, (1, 0)))

    def test_solutions_verified_by_substitution(self):
        rng = random.Random(2)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 6))
            k = rng.choice((2, 3, 5, 6, 10, 15, 30))
            i = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            f = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            a = solve_squarefree(g, i, f)
            if a is not None:
                assert apply_colored(g, i, a) == f

    def test_mismatched_color_counts_rejected(self):
        with pytest.raises(ValueError):
            solve_squarefree(path_graph(2), zeros(3, 2), ColoredState(5, (0, 0)))


class TestGeneralSolver:
    def test_path_four_colors(self):
        g = path_graph(3)
        f = ColoredState(4, (1, 1, 1))
        a = solve_general(g, zeros(4, 3), f)
        assert a == PressCounts(4, (0, 1, 0))

    def test_triangle_uniform_bump(self):
        g = complete_graph(3)
        f = ColoredState(3, (1, 1, 1))
        a = solve_general(g, zeros(3, 3), f)
        assert a is not None
        assert apply_colored(g, zeros(3, 3), a) == f

    def test_prime_power_moduli(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 5))
            k = rng.choice((4, 8, 9, 12, 27))
            i = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            f = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            a = solve_general(g, i, f)
            if a is not None:
                assert apply_colored(g, i, a) == f

    def test_agrees_with_squarefree_route(self):
        rng = random.Random(4)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 5))
            k = rng.choice((2, 3, 5, 6, 10, 15))
            i = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            f = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            via_crt = solve_squarefree(g, i, f)
            via_smith = solve_general(g, i, f)
            assert (via_crt is None) == (via_smith is None)
            if via_crt is not None:
                assert apply_colored(g, i, via_crt) == f
                assert apply_colored(g, i, via_smith) == f

    def test_verdicts_match_exhaustive_search(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 3))
            k = rng.choice((2, 3, 4))
            i = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            f = ColoredState(k, tuple(rng.randrange(k) for _ in range(g.n)))
            assert solvable_colored(g, i, f) == oracle_reachable(g, i, f)

    def test_two_colors_is_the_classic_game(self):
        rng = random.Random(6)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8))
            spec = compile_game(g, CLASSIC)
            i_bits = rng.getrandbits(g.n)
            f_bits = rng.getrandbits(g.n)
            i2 = ColoredState(2, tuple((i_bits >> t) & 1 for t in range(g.n)))
            f2 = ColoredState(2, tuple((f_bits >> t) & 1 for t in range(g.n)))
            assert solvable_colored(g, i2, f2) == equivalent(
                spec, BitVector(g.n, i_bits), BitVector(g.n, f_bits)
            )
