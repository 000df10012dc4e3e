"""Gate-level hardware model of the classic game.

One T flip-flop holds each lamp.  One OR gate per vertex collects the
button lines of the vertex's closed neighborhood (fan-in degree + 1) and
drives the flip-flop's toggle input, so a button pulse flips exactly the
lamps the algebraic game says it should.  Presses are strictly sequential:
one button per clock pulse, no simultaneous pressing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2linalg import BitVector
from .graph import Graph

__all__ = ["Netlist", "CircuitState", "build_netlist", "initial_state", "simulate_press", "netlist_to_json"]


@dataclass(frozen=True)
class Netlist:
    """Wiring only: ``or_inputs[i]`` lists the buttons feeding OR gate i."""

    n: int
    or_inputs: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CircuitState:
    """Flip-flop outputs, one bit per lamp."""

    q: BitVector


def build_netlist(g: Graph) -> Netlist:
    """OR gate i listens to button i and the buttons of i's neighbors."""
    if g.directed:
        raise ValueError("the circuit model is built for undirected graphs")
    inputs = tuple(tuple(sorted(set(g.neighbors(v)) | {v})) for v in range(g.n))
    return Netlist(g.n, inputs)


def initial_state(nl: Netlist, lights: BitVector) -> CircuitState:
    """Preset the flip-flops to a chosen lamp pattern."""
    if lights.n != nl.n:
        raise ValueError(f"expected {nl.n} lamps, got {lights.n}")
    return CircuitState(lights)


def simulate_press(nl: Netlist, s: CircuitState, j: int) -> CircuitState:
    """One clock pulse with button ``j`` held: every OR gate hearing it toggles."""
    if not 0 <= j < nl.n:
        raise ValueError(f"button {j} out of range for {nl.n} buttons")
    if s.q.n != nl.n:
        raise ValueError(f"state has {s.q.n} lamps, netlist has {nl.n}")
    toggles = 0
    for i, inputs in enumerate(nl.or_inputs):
        if j in inputs:
            toggles |= 1 << i
    return CircuitState(BitVector(nl.n, s.q.bits ^ toggles))


def netlist_to_json(nl: Netlist) -> dict:
    """Flat netlist document: nets, gates and their fan-in lists."""
    return {
        "buttons": [f"B{i}" for i in range(nl.n)],
        "flipflops": [f"Q{i}" for i in range(nl.n)],
        "or_gates": [
            {"output": f"T{i}", "inputs": [f"B{j}" for j in inputs]}
            for i, inputs in enumerate(nl.or_inputs)
        ],
    }
