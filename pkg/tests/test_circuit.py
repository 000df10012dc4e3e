"""Circuit model versus the algebraic game, press for press."""

from __future__ import annotations

import random

import pytest

from lightsout.circuit import build_netlist, initial_state, netlist_to_json, simulate_press
from lightsout.f2linalg import BitVector
from lightsout.game import CLASSIC, compile_game, press
from lightsout.graph import Graph, path_graph
from samplers import random_graph

V = BitVector.from_string


class TestNetlist:
    def test_path_wiring(self):
        nl = build_netlist(path_graph(3))
        assert nl.or_inputs == ((0, 1), (0, 1, 2), (1, 2))

    def test_fan_in_is_degree_plus_one(self):
        rng = random.Random(0)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 10))
            nl = build_netlist(g)
            for v in range(g.n):
                assert len(nl.or_inputs[v]) == g.degree(v) + 1
                assert v in nl.or_inputs[v]

    def test_rejects_directed(self):
        with pytest.raises(ValueError):
            build_netlist(Graph(2, [(0, 1)], directed=True))

    def test_json_document(self):
        doc = netlist_to_json(build_netlist(path_graph(2)))
        assert doc["buttons"] == ["B0", "B1"]
        assert doc["flipflops"] == ["Q0", "Q1"]
        assert doc["or_gates"] == [
            {"output": "T0", "inputs": ["B0", "B1"]},
            {"output": "T1", "inputs": ["B0", "B1"]},
        ]


class TestSimulation:
    def test_center_press_lights_path(self):
        nl = build_netlist(path_graph(3))
        s = initial_state(nl, V("000"))
        assert simulate_press(nl, s, 1).q == V("111")

    def test_press_twice_cancels(self):
        nl = build_netlist(path_graph(3))
        s = initial_state(nl, V("010"))
        assert simulate_press(nl, simulate_press(nl, s, 0), 0).q == V("010")

    def test_matches_algebraic_press_along_random_runs(self):
        rng = random.Random(1)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 10))
            spec = compile_game(g, CLASSIC)
            nl = build_netlist(g)
            lights = BitVector(g.n, rng.getrandbits(g.n))
            circuit = initial_state(nl, lights)
            algebra = lights
            for _ in range(30):
                j = rng.randrange(g.n)
                circuit = simulate_press(nl, circuit, j)
                algebra = press(spec, algebra, j)
                assert circuit.q == algebra

    def test_index_validation(self):
        nl = build_netlist(path_graph(2))
        s = initial_state(nl, V("00"))
        with pytest.raises(ValueError):
            simulate_press(nl, s, 2)
        with pytest.raises(ValueError):
            initial_state(nl, V("000"))
