"""Exit-code and output contract of the command line front end."""

import json

import pytest

from lightsout.cli import main
from lightsout.colored import ColoredState, PressCounts, apply_colored
from lightsout.graph import generate, graph_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- gen -------------------------------------------------------------------


def test_gen_prints_graph_json(capsys):
    code, out, _ = run(capsys, "gen", "--graph", "grid:2x3")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 6
    assert doc["directed"] is False
    assert graph_from_json(doc) == generate("grid:2x3")


def test_gen_accepts_inline_json(capsys):
    inline = json.dumps({"n": 3, "directed": False, "edges": [[0, 1], [1, 2]]})
    code, out, _ = run(capsys, "gen", "--graph", inline)
    assert code == 0
    assert json.loads(out)["n"] == 3


def test_gen_accepts_file_path(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 2, "directed": False, "edges": [[0, 1]]}))
    code, out, _ = run(capsys, "gen", "--graph", str(path))
    assert code == 0
    assert json.loads(out)["n"] == 2


def test_gen_rejects_junk(capsys):
    code, _, err = run(capsys, "gen", "--graph", "dodecahedron:12")
    assert code == 2
    assert "error" in err


# --- solve -----------------------------------------------------------------


def test_solve_path3_all_on(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "path:3", "--from", "111")
    assert code == 0
    assert out.splitlines() == ["presses: 010", "weight: 1"]


def test_solve_json_mode(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "path:3", "--from", "111", "--json")
    assert code == 0
    assert json.loads(out) == {"solvable": True, "presses": "010", "weight": 1}


def test_solve_unsolvable_prints_residual(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "cycle:3", "--from", "100")
    assert code == 1
    assert out.splitlines() == ["unsolvable", "residual: 11"]


def test_solve_explicit_target(capsys):
    code, out, _ = run(
        capsys, "solve", "--graph", "path:3", "--from", "110", "--to", "001", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["solvable"] is True


def test_solve_variant_flag(capsys):
    # second-neighbor rule on cycle:4 is the identity: anything solves to itself only.
    code, out, _ = run(
        capsys,
        "solve",
        "--graph",
        "cycle:4",
        "--variant",
        "second",
        "--from",
        "1010",
        "--to",
        "1010",
        "--json",
    )
    assert code == 0
    assert json.loads(out)["presses"] == "0000"


def test_solve_wrong_state_length_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--graph", "path:3", "--from", "11")
    assert code == 2
    assert "error" in err


def test_parity_gated_variant_on_mixed_graph_is_usage_error(capsys):
    # path:3 has degrees 1, 2, 1 — mixed parity, so the second-neighbor rule refuses.
    code, _, err = run(capsys, "solve", "--graph", "path:3", "--variant", "second", "--from", "111")
    assert code == 2
    assert "parity" in err or "degree" in err


def test_unknown_command_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_missing_required_flag_is_usage_error(capsys):
    assert run(capsys, "solve", "--graph", "path:3")[0] == 2


# --- check -----------------------------------------------------------------


def test_check_equivalent(capsys):
    code, out, _ = run(capsys, "check", "--graph", "path:3", "--from", "111", "--to", "000")
    assert code == 0
    assert out.strip() == "equivalent"


def test_check_not_equivalent(capsys):
    code, out, _ = run(
        capsys, "check", "--graph", "cycle:3", "--from", "100", "--to", "000", "--json"
    )
    assert code == 1
    assert json.loads(out) == {"equivalent": False, "residual": "11"}


# --- invariant ---------------------------------------------------------------


def test_invariant_rows_cycle3(capsys):
    code, out, _ = run(capsys, "invariant", "--graph", "cycle:3")
    assert code == 0
    assert out.splitlines() == ["110", "101"]


def test_invariant_value_at_state(capsys):
    code, out, _ = run(
        capsys, "invariant", "--graph", "cycle:3", "--state", "100", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"rows": ["110", "101"], "value": "11"}


def test_invariant_full_rank_graph_has_no_rows(capsys):
    code, out, _ = run(capsys, "invariant", "--graph", "path:3", "--json")
    assert code == 0
    assert json.loads(out) == {"rows": []}


# --- special -----------------------------------------------------------------


def test_special_inverting_witness(capsys):
    code, out, _ = run(capsys, "special", "--graph", "cycle:3", "--kind", "inverting")
    assert code == 0
    assert out.strip() == "100"


def test_special_enumerate_all(capsys):
    code, out, _ = run(
        capsys, "special", "--graph", "cycle:3", "--kind", "inverting", "--all", "--json"
    )
    assert code == 0
    assert json.loads(out) == {
        "kind": "inverting",
        "states": ["100", "010", "001", "111"],
    }


def test_special_none_found(capsys):
    code, out, _ = run(capsys, "special", "--graph", "path:3", "--kind", "neutral")
    assert code == 1
    assert out.strip() == "none"


# --- colored-solve -----------------------------------------------------------


def test_colored_solve_roundtrip(capsys):
    code, out, _ = run(
        capsys,
        "colored-solve",
        "--graph",
        "path:3",
        "--k",
        "6",
        "--from",
        "0,0,0",
        "--to",
        "1,1,1",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["solvable"] is True and doc["k"] == 6
    counts = PressCounts(6, tuple(doc["counts"]))
    reached = apply_colored(generate("path:3"), ColoredState.uniform(6, 3), counts)
    assert reached == ColoredState(6, (1, 1, 1))


def test_colored_solve_default_target_is_all_zero(capsys):
    code, out, _ = run(
        capsys, "colored-solve", "--graph", "path:3", "--k", "4", "--from", "2,2,2", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    counts = PressCounts(4, tuple(doc["counts"]))
    reached = apply_colored(generate("path:3"), ColoredState(4, (2, 2, 2)), counts)
    assert reached == ColoredState.uniform(4, 3)


def test_colored_solve_unsolvable(capsys):
    # one bump on a single K_3 vertex is invisible to the mod-3 column sums
    code, out, _ = run(
        capsys, "colored-solve", "--graph", "cycle:3", "--k", "3", "--from", "1,0,0"
    )
    assert code == 1
    assert out.strip() == "unsolvable"


def test_colored_solve_squarefree_route(capsys):
    # start from a state produced by a press, so it is solvable by construction
    code, out, _ = run(
        capsys,
        "colored-solve",
        "--graph",
        "cycle:4",
        "--k",
        "6",
        "--from",
        "1,1,0,1",
        "--method",
        "squarefree",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    counts = PressCounts(6, tuple(doc["counts"]))
    reached = apply_colored(generate("cycle:4"), ColoredState(6, (1, 1, 0, 1)), counts)
    assert reached == ColoredState.uniform(6, 4)


def test_colored_solve_squarefree_rejects_square_modulus(capsys):
    code, _, err = run(
        capsys,
        "colored-solve",
        "--graph",
        "path:3",
        "--k",
        "4",
        "--from",
        "1,1,1",
        "--method",
        "squarefree",
    )
    assert code == 2
    assert "squarefree" in err


def test_colored_solve_inline_json_state(capsys):
    state = json.dumps({"k": 5, "values": [1, 2, 3]})
    code, out, _ = run(
        capsys, "colored-solve", "--graph", "path:3", "--from", state, "--json"
    )
    assert code == 0
    assert json.loads(out)["k"] == 5


def test_colored_solve_state_file(tmp_path, capsys):
    path = tmp_path / "state.json"
    path.write_text(json.dumps({"k": 3, "values": [1, 1, 1]}))
    code, out, _ = run(capsys, "colored-solve", "--graph", "path:3", "--from", str(path))
    assert code == 0
    assert out.splitlines()[0].startswith("counts: ")


def test_colored_solve_modulus_mismatch(capsys):
    state = json.dumps({"k": 5, "values": [1, 2, 3]})
    code, _, err = run(
        capsys, "colored-solve", "--graph", "path:3", "--k", "6", "--from", state
    )
    assert code == 2
    assert "disagrees" in err


# --- min-solve ---------------------------------------------------------------


def test_min_solve_triangle_all_on(capsys):
    code, out, _ = run(capsys, "min-solve", "--graph", "cycle:3", "--from", "111")
    assert code == 0
    assert out.splitlines() == ["presses: 100", "weight: 1", "coset: 4"]


def test_min_solve_budget_exceeded(capsys):
    code, _, err = run(
        capsys, "min-solve", "--graph", "cycle:3", "--from", "111", "--budget", "1"
    )
    assert code == 3
    assert "budget" in err


def test_min_solve_unsolvable(capsys):
    code, out, _ = run(capsys, "min-solve", "--graph", "cycle:3", "--from", "100", "--json")
    assert code == 1
    assert json.loads(out) == {"solvable": False, "residual": "11"}


# --- circuit-check -----------------------------------------------------------


def test_circuit_check_random_walk(capsys):
    code, out, _ = run(
        capsys, "circuit-check", "--graph", "grid:3x3", "--random", "25", "--seed", "3"
    )
    assert code == 0
    assert out.strip() == "match: 25 presses"


def test_circuit_check_explicit_presses(capsys):
    code, out, _ = run(
        capsys,
        "circuit-check",
        "--graph",
        "path:3",
        "--from",
        "101",
        "--presses",
        "0,1,2,1",
        "--json",
    )
    assert code == 0
    assert json.loads(out) == {"match": True, "steps": 4}


def test_circuit_check_netlist_output(capsys):
    code, out, _ = run(
        capsys, "circuit-check", "--graph", "path:2", "--presses", "0", "--json", "--netlist"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["match"] is True
    assert doc["netlist"]["or_gates"][0]["inputs"] == ["B0", "B1"]


def test_circuit_check_bad_button_is_usage_error(capsys):
    code, _, err = run(capsys, "circuit-check", "--graph", "path:3", "--presses", "0,9")
    assert code == 2
    assert "error" in err


# --- argparse plumbing -------------------------------------------------------


@pytest.mark.parametrize("argv", [[], ["--help"], ["solve", "--help"]])
def test_help_paths_do_not_crash(capsys, argv):
    code = main(argv)
    capsys.readouterr()
    assert code in (0, 2)
