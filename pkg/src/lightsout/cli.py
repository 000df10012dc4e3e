"""Command-line front end.

Exit codes: 0 on success, 1 when the answer is negative (unsolvable,
not equivalent, no such state), 2 on usage or input errors, 3 when a
minimum-weight search exceeds its budget.

``--graph`` accepts three notations: a generator spec (``grid:5x5``),
inline graph JSON (``{"n": 3, ...}``), or a path to a JSON file.
Bitstring states are written leftmost = vertex 0.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional

from .circuit import build_netlist, initial_state, netlist_to_json, simulate_press
from .colored import (
    ColoredState,
    solve_general,
    solve_squarefree,
    state_from_json,
)
from .f2linalg import BitVector
from .game import (
    GameSpec,
    SpecialKind,
    compile_game,
    enumerate_special,
    find_special,
    invariant_value,
    parse_variant,
    press,
    solve_game,
)
from .graph import Graph, generate, graph_from_json, graph_to_json
from .minweight import DEFAULT_BUDGET, BudgetExceededError, min_weight_solution

__all__ = ["main"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load_graph(text: str) -> Graph:
    text = text.strip()
    if text.startswith("{"):
        return graph_from_json(text)
    try:
        return generate(text)
    except ValueError:
        pass
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            return graph_from_json(fh.read())
    raise ValueError(f"{text!r} is not a generator spec, graph JSON, or readable file")


def _parse_state(text: str, n: int) -> BitVector:
    v = BitVector.from_string(text.strip())
    if v.n != n:
        raise ValueError(f"state {text!r} has {v.n} bits, expected {n}")
    return v


def _load_colored_state(text: str, k: Optional[int], n: int) -> ColoredState:
    text = text.strip()
    if text.startswith("{"):
        state = state_from_json(json.loads(text))
    elif os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            state = state_from_json(json.load(fh))
    else:
        if k is None:
            raise ValueError("a bare value list needs --k to set the modulus")
        state = ColoredState(k, tuple(int(t) for t in text.split(",")))
    if k is not None and state.k != k:
        raise ValueError(f"state modulus {state.k} disagrees with --k {k}")
    if len(state) != n:
        raise ValueError(f"state has {len(state)} values, expected {n}")
    return state


def _compile(args: argparse.Namespace) -> GameSpec:
    return compile_game(_load_graph(args.graph), parse_variant(args.variant))


def _emit(args: argparse.Namespace, doc: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    print(json.dumps(graph_to_json(_load_graph(args.graph))))
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    spec = _compile(args)
    start = _parse_state(args.start, spec.n)
    target = (
        BitVector.zeros(spec.n) if args.target is None else _parse_state(args.target, spec.n)
    )
    solution = solve_game(spec, start, target)
    if solution is None:
        residual = invariant_value(spec, start ^ target)
        _emit(
            args,
            {"solvable": False, "residual": residual.to_string()},
            ["unsolvable", f"residual: {residual.to_string()}"],
        )
        return EXIT_NEGATIVE
    doc = {"solvable": True, **solution.to_json()}
    _emit(args, doc, [f"presses: {solution.presses.to_string()}", f"weight: {solution.weight}"])
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    spec = _compile(args)
    start = _parse_state(args.start, spec.n)
    target = _parse_state(args.target, spec.n)
    residual = invariant_value(spec, start ^ target)
    same = residual.bits == 0
    doc = {"equivalent": same, "residual": residual.to_string()}
    if same:
        _emit(args, doc, ["equivalent"])
        return EXIT_OK
    _emit(args, doc, ["not equivalent", f"residual: {residual.to_string()}"])
    return EXIT_NEGATIVE


def _cmd_invariant(args: argparse.Namespace) -> int:
    spec = _compile(args)
    j = spec.invariant
    rows = [j.row(i).to_string() for i in range(j.rows)]
    doc: dict = {"rows": rows}
    lines = list(rows)
    if args.state is not None:
        value = invariant_value(spec, _parse_state(args.state, spec.n))
        doc["value"] = value.to_string()
        lines.append(f"value: {value.to_string()}")
    _emit(args, doc, lines)
    return EXIT_OK


def _cmd_special(args: argparse.Namespace) -> int:
    # special states are defined for the classic rule only
    spec = compile_game(_load_graph(args.graph), parse_variant("classic"))
    kind = SpecialKind(args.kind)
    if args.all:
        states = enumerate_special(spec, kind)
        _emit(
            args,
            {"kind": kind.value, "states": [s.to_string() for s in states]},
            [s.to_string() for s in states],
        )
        return EXIT_OK
    witness = find_special(spec, kind)
    if witness is None:
        _emit(args, {"kind": kind.value, "state": None}, ["none"])
        return EXIT_NEGATIVE
    _emit(args, {"kind": kind.value, "state": witness.to_string()}, [witness.to_string()])
    return EXIT_OK


def _cmd_colored_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    start = _load_colored_state(args.start, args.k, g.n)
    if args.target is None:
        target = ColoredState.uniform(start.k, g.n)
    else:
        target = _load_colored_state(args.target, args.k, g.n)
    if target.k != start.k:
        raise ValueError(f"state moduli disagree: {start.k} vs {target.k}")
    solver = solve_squarefree if args.method == "squarefree" else solve_general
    counts = solver(g, start, target)
    if counts is None:
        _emit(args, {"solvable": False, "k": start.k}, ["unsolvable"])
        return EXIT_NEGATIVE
    csv = ",".join(str(c) for c in counts.counts)
    _emit(
        args,
        {"solvable": True, "k": counts.k, "counts": list(counts.counts), "total": counts.total()},
        [f"counts: {csv}", f"total: {counts.total()}"],
    )
    return EXIT_OK


def _cmd_min_solve(args: argparse.Namespace) -> int:
    spec = _compile(args)
    start = _parse_state(args.start, spec.n)
    target = (
        BitVector.zeros(spec.n) if args.target is None else _parse_state(args.target, spec.n)
    )
    result = min_weight_solution(spec.rule, start ^ target, budget=args.budget)
    if result is None:
        residual = invariant_value(spec, start ^ target)
        _emit(
            args,
            {"solvable": False, "residual": residual.to_string()},
            ["unsolvable", f"residual: {residual.to_string()}"],
        )
        return EXIT_NEGATIVE
    doc = {"solvable": True, **result.to_json()}
    _emit(
        args,
        doc,
        [
            f"presses: {result.solution.to_string()}",
            f"weight: {result.weight}",
            f"coset: {result.coset_size}",
        ],
    )
    return EXIT_OK


def _cmd_circuit_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    spec = compile_game(g, parse_variant("classic"))
    nl = build_netlist(g)
    start = (
        BitVector.zeros(g.n) if args.start is None else _parse_state(args.start, g.n)
    )
    if args.presses is not None:
        sequence = [int(t) for t in args.presses.split(",")] if args.presses else []
    else:
        rng = random.Random(args.seed)
        sequence = [rng.randrange(g.n) for _ in range(args.random)]
    algebra = start
    wires = initial_state(nl, start)
    for step, j in enumerate(sequence):
        algebra = press(spec, algebra, j)
        wires = simulate_press(nl, wires, j)
        if wires.q != algebra:
            _emit(
                args,
                {"match": False, "step": step, "vertex": j},
                [f"mismatch at step {step} (button {j})"],
            )
            return EXIT_NEGATIVE
    doc = {"match": True, "steps": len(sequence)}
    if args.netlist:
        doc["netlist"] = netlist_to_json(nl)
        _emit(args, doc, [json.dumps(netlist_to_json(nl)), f"match: {len(sequence)} presses"])
    else:
        _emit(args, doc, [f"match: {len(sequence)} presses"])
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(host=args.host, port=args.port, snapshot_path=args.snapshot, budget=args.budget)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightsout", description="Exact solvers for Lights Out games on graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, *, graph=True, variant=False, json_flag=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        if graph:
            p.add_argument("--graph", required=True, help="generator spec, JSON, or file path")
        if variant:
            p.add_argument(
                "--variant",
                default="classic",
                help="classic | second | neighborhood | nonreflexive:<mask> | asymmetric",
            )
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("gen", _cmd_gen, "print a generated graph as JSON", json_flag=False)

    p = add("solve", _cmd_solve, "find a press set between two states", variant=True)
    p.add_argument("--from", dest="start", required=True, help="initial state bitstring")
    p.add_argument("--to", dest="target", help="target state bitstring (default all-off)")

    p = add("check", _cmd_check, "test whether two states are equivalent", variant=True)
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="target", required=True)

    p = add("invariant", _cmd_invariant, "print the separating invariant rows", variant=True)
    p.add_argument("--state", help="also evaluate the invariant at this state")

    p = add("special", _cmd_special, "find special states of the classic game")
    p.add_argument(
        "--kind",
        required=True,
        choices=[k.value for k in SpecialKind],
    )
    p.add_argument("--all", action="store_true", help="enumerate the full set")

    p = add("colored-solve", _cmd_colored_solve, "solve the k-colored game")
    p.add_argument("--k", type=int, help="modulus for bare value lists")
    p.add_argument("--from", dest="start", required=True, help="values CSV, JSON, or file")
    p.add_argument("--to", dest="target", help="target state (default all-zero)")
    p.add_argument(
        "--method",
        choices=["general", "squarefree"],
        default="general",
        help="general (Smith form) or squarefree (per-prime CRT)",
    )

    p = add("min-solve", _cmd_min_solve, "find a minimum-weight press set", variant=True)
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="target")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="coset search cap")

    p = add("circuit-check", _cmd_circuit_check, "replay presses through the gate model")
    p.add_argument("--from", dest="start", help="initial lamp pattern (default all-off)")
    p.add_argument("--presses", help="comma-separated button sequence")
    p.add_argument("--random", type=int, default=30, help="random press count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--netlist", action="store_true", help="include the netlist JSON")

    p = add("serve", _cmd_serve, "run the REST service", graph=False, json_flag=False)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None, help="default $LIGHTSOUT_PORT or 8000")
    p.add_argument("--snapshot", default=None, help="default $LIGHTSOUT_SNAPSHOT")
    p.add_argument("--budget", type=int, default=None, help="default $LIGHTSOUT_BUDGET")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
