"""Graph construction, generators, Cayley graphs, parity, automorphisms."""

from __future__ import annotations

import random

import pytest

from lightsout.f2linalg import BitMatrix, BitVector
from lightsout.graph import (
    DegreeParity,
    Graph,
    Permutation,
    adjacency_matrix,
    apply_permutation,
    cayley,
    complete_graph,
    cycle_graph,
    degree_parity,
    generate,
    graph_from_json,
    graph_to_json,
    grid_graph,
    is_automorphism,
    path_graph,
    torus_graph,
)


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def klein_table() -> list[list[int]]:
    # Z_2 x Z_2 with elements encoded as 2-bit integers; the product is XOR.
    return [[i ^ j for j in range(4)] for i in range(4)]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


class TestGraphBasics:
    def test_normalizes_undirected_edges(self):
        g = Graph(3, [(1, 0), (2, 1)])
        assert g.edges == frozenset({(0, 1), (1, 2)})
        assert g.has_edge(0, 1) and g.has_edge(1, 0)

    def test_rejects_loops_and_bad_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_directed_edges_keep_orientation(self):
        g = Graph(3, [(2, 0)], directed=True)
        assert g.has_edge(2, 0)
        assert not g.has_edge(0, 2)

    def test_neighbors_and_degree(self):
        g = path_graph(3)
        assert g.neighbors(1) == (0, 2)
        assert g.degree(0) == 1 and g.degree(1) == 2

    def test_adjacency_matrix_shape(self):
        g = path_graph(3)
        a = adjacency_matrix(g)
        assert a.to_lists() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
        assert a.is_symmetric()
        assert a.diagonal().is_zero()

    def test_directed_adjacency_orientation(self):
        g = Graph(2, [(0, 1)], directed=True)
        a = adjacency_matrix(g)
        assert a.entry(0, 1) == 1 and a.entry(1, 0) == 0


class TestGenerators:
    def test_path(self):
        assert path_graph(3).edges == frozenset({(0, 1), (1, 2)})

    def test_cycle(self):
        g = cycle_graph(4)
        assert g.num_edges() == 4
        assert g.has_edge(3, 0)
        with pytest.raises(ValueError):
            cycle_graph(2)

    def test_grid_edge_count(self):
        assert grid_graph(2, 3).num_edges() == 7
        for r in range(1, 5):
            for c in range(1, 5):
                assert grid_graph(r, c).num_edges() == r * (c - 1) + c * (r - 1)

    def test_torus_edge_count(self):
        assert torus_graph(3, 3).num_edges() == 18
        for r in range(3, 6):
            for c in range(3, 6):
                assert torus_graph(r, c).num_edges() == 2 * r * c

    def test_torus_rejects_degenerate_axes(self):
        with pytest.raises(ValueError):
            torus_graph(2, 4)

    def test_complete(self):
        assert complete_graph(4).num_edges() == 6

    def test_generate_grammar(self):
        assert generate("path:5") == path_graph(5)
        assert generate("cycle:4") == cycle_graph(4)
        assert generate("grid:5x5") == grid_graph(5, 5)
        assert generate("torus:4x4") == torus_graph(4, 4)
        assert generate("complete:6") == complete_graph(6)

    def test_generate_rejects_junk(self):
        for bad in ("wheel:5", "grid:5", "path:", "grid:5x", "path:5x5", ""):
            with pytest.raises(ValueError):
                generate(bad)


class TestCayley:
    def test_cyclic_group_gives_cycle(self):
        g = cayley(cyclic_table(4), [1, 3])
        assert g == cycle_graph(4)

    def test_cyclic_group_small_gives_triangle(self):
        assert cayley(cyclic_table(3), [1, 2]) == complete_graph(3)

    def test_klein_group_gives_complete_graph(self):
        g = cayley(klein_table(), [1, 2, 3])
        assert g == complete_graph(4)

    def test_generating_set_must_be_symmetric(self):
        with pytest.raises(ValueError):
            cayley(cyclic_table(4), [1])  # inverse of 1 is 3

    def test_identity_cannot_generate(self):
        with pytest.raises(ValueError):
            cayley(cyclic_table(4), [0, 1, 3])

    def test_rejects_table_without_identity(self):
        table = [[1, 0], [0, 1]]  # both rows permutations, no identity element
        with pytest.raises(ValueError):
            cayley(table, [1])

    def test_rejects_non_associative_table(self):
        # a Latin square with identity 0 that fails associativity (order 5)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(ValueError, match="associative"):
            cayley(table, [1])

    def test_rejects_non_permutation_row(self):
        table = [[0, 1], [1, 1]]
        with pytest.raises(ValueError):
            cayley(table, [1])

    def test_cayley_is_vertex_transitive_looking(self):
        # every vertex of a Cayley graph has degree |S|
        g = cayley(cyclic_table(7), [1, 2, 5, 6])
        assert all(g.degree(v) == 4 for v in range(7))

    def test_left_translations_are_automorphisms(self):
        table = cyclic_table(6)
        g = cayley(table, [1, 5])
        for h in range(6):
            p = Permutation(tuple(table[h][x] for x in range(6)))
            assert is_automorphism(g, p)


class TestDegreeParity:
    def test_cycle_is_even(self):
        assert degree_parity(cycle_graph(5)) is DegreeParity.ALL_EVEN_OR_ZERO

    def test_edgeless_counts_as_even(self):
        assert degree_parity(Graph(4)) is DegreeParity.ALL_EVEN_OR_ZERO

    def test_complete_even_order_is_odd(self):
        assert degree_parity(complete_graph(4)) is DegreeParity.ALL_ODD

    def test_path_is_mixed(self):
        assert degree_parity(path_graph(3)) is DegreeParity.MIXED

    def test_matches_direct_degree_computation(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            degs = [g.degree(v) for v in range(g.n)]
            got = degree_parity(g)
            if all(d % 2 == 0 for d in degs):
                assert got is DegreeParity.ALL_EVEN_OR_ZERO
            elif all(d % 2 == 1 for d in degs):
                assert got is DegreeParity.ALL_ODD
            else:
                assert got is DegreeParity.MIXED


class TestAutomorphisms:
    def test_rotation_of_cycle(self):
        g = cycle_graph(4)
        assert is_automorphism(g, Permutation((1, 2, 3, 0)))

    def test_path_end_swap_fails(self):
        g = path_graph(3)
        assert not is_automorphism(g, Permutation((1, 0, 2)))
        assert is_automorphism(g, Permutation((2, 1, 0)))  # reversal works

    def test_permutation_must_be_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_matrix_characterisation(self):
        # p is an automorphism exactly when P^T A P == A
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 7)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            p = Permutation(tuple(perm))
            a = adjacency_matrix(g)
            pm = BitMatrix(
                n, n, tuple(1 << p(i) for i in range(n))
            )  # row i has a 1 at column p(i)
            conjugated = pm.transpose() @ a @ pm
            assert is_automorphism(g, p) == (conjugated == a)

    def test_apply_permutation_moves_coordinates(self):
        p = Permutation((1, 2, 0))
        x = BitVector.from_string("100")
        assert apply_permutation(p, x).to_string() == "010"

    def test_apply_permutation_preserves_weight(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(1, 10)
            perm = list(range(n))
            rng.shuffle(perm)
            x = BitVector(n, rng.getrandbits(n))
            y = apply_permutation(Permutation(tuple(perm)), x)
            assert y.weight() == x.weight()


class TestJson:
    def test_round_trip(self):
        g = grid_graph(2, 3)
        doc = graph_to_json(g)
        assert doc["n"] == 6 and doc["directed"] is False
        assert graph_from_json(doc) == g

    def test_round_trip_directed(self):
        g = Graph(3, [(0, 1), (2, 1)], directed=True)
        assert graph_from_json(graph_to_json(g)) == g

    def test_parses_string_documents(self):
        g = graph_from_json('{"n": 2, "directed": false, "edges": [[0, 1]]}')
        assert g == path_graph(2)

    def test_malformed_documents(self):
        with pytest.raises(ValueError):
            graph_from_json({"edges": []})
        with pytest.raises(ValueError):
            graph_from_json('["not", "a", "graph"]')
