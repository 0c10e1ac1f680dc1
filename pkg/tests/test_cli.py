import json

import pytest
from click.testing import CliRunner

from main import cli

P4 = "graph 4 3\n0 1\n1 2\n2 3\n"
TRANSITIVE = "tournament 4\n0 1 1 1\n0 0 1 1\n0 0 0 1\n0 0 0 0\n"
OUT_DIAMOND = "tournament 4\n0 1 1 1\n0 0 1 0\n0 0 0 1\n0 1 0 0\n"


@pytest.fixture
def run(write_input):
    runner = CliRunner()

    def invoke(*args, text=None):
        args = list(args)
        if text is not None:
            args.insert(args.index("@"), write_input("input.txt", text))
            args.remove("@")
        return runner.invoke(cli, args, obj={})

    return invoke


def test_mu_command(run):
    result = run("mu", "@", "--set", "0", text=P4)
    assert result.exit_code == 0
    assert json.loads(result.output) == {"parts": [[0], [1, 2, 3]]}


def test_mu_text_format(run):
    result = run("--format", "text", "mu", "@", "--set", "0,3", "--method", "naive", text=P4)
    assert result.output.splitlines() == ["0 3", "1 2"]


def test_strong_tree_command(run):
    payload = json.loads(run("strong-tree", "@", text=P4).output)
    elements = [node["elements"] for node in payload["nodes"]]
    assert [0, 3] in elements
    assert [1, 2] in elements


def test_fast_and_generic_tree_outputs_match(run):
    fast = run("umod-tree", "@", "--fast", text=P4)
    generic = run("umod-tree", "@", "--generic", text=P4)
    assert fast.exit_code == generic.exit_code == 0
    assert fast.output == generic.output
    payload = json.loads(fast.output)
    assert payload["umodule_count"] == 10
    assert payload["size"] == 4


def test_tree_dot_format(run):
    result = run("--format", "dot", "umod-tree", "@", text=TRANSITIVE)
    assert result.exit_code == 0
    assert "graph {" in result.output
    assert "record" in result.output


def test_dot_format_needs_a_tree(run):
    result = run("--format", "dot", "mu", "@", "--set", "0", text=P4)
    assert result.exit_code == 2


def test_seidel_command(run):
    payload = json.loads(run("seidel", "@", "--pivot", "0", text=TRANSITIVE).output)
    assert payload["pivot"] == 0
    assert payload["elements"] == [1, 2, 3]
    assert payload["classes"][0][0] is None
    assert payload["modular_tree"]["root"]["type"] == "linear"


def test_check_command(run):
    payload = json.loads(run("check", "@", text=P4).output)
    assert payload["local_congruence"] == 2
    assert payload["four_elements"] == {"holds": True, "witness": None}
    assert payload["umodular_prime"] is False
    assert payload["self_complemented"] is True


def test_tournament_commands(run):
    recognized = json.loads(run("tournament", "recognize", "@", text=TRANSITIVE).output)
    assert recognized["diamond_free"] is True
    assert recognized["totally_decomposable"] is True
    assert json.loads(run("tournament", "order", "@", text=TRANSITIVE).output) == [0, 1, 2, 3]
    assert json.loads(run("tournament", "fvs", "@", text=TRANSITIVE).output) == []
    extended = json.loads(run("tournament", "extend", "@", text=TRANSITIVE).output)
    assert extended["structure"] == "tournament"
    assert len(extended["steps"]) == 3


def test_recognize_reports_diamond(run):
    payload = json.loads(run("tournament", "recognize", "@", text=OUT_DIAMOND).output)
    assert payload["diamond_free"] is False
    assert payload["diamond"] == [0, 1, 2, 3]
    assert payload["extension_sequence"] is False


def test_precondition_failure_exits_with_three(run):
    result = run("tournament", "order", "@", text=OUT_DIAMOND)
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "PreconditionError"


def test_graph_is_rejected_by_tournament_commands(run):
    assert run("tournament", "fvs", "@", text=P4).exit_code == 3


@pytest.mark.parametrize("command,members", [("mu", "9"), ("mu", "0,4"), ("bijoin", "0,9")])
def test_out_of_range_ids_exit_with_three(run, command, members):
    result = run(command, "@", "--set", members, text=P4)
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "PreconditionError"


def test_round_order_flag(run):
    assert json.loads(run("tournament", "order", "@", "--round", text=TRANSITIVE).output) == [0, 1, 2, 3]
    result = run("tournament", "order", "@", "--round", text=OUT_DIAMOND)
    assert result.exit_code == 3


def test_parse_failure_exits_with_two(run):
    result = run("mu", "@", "--set", "0", text="graph 3 1\n0 x\n")
    assert result.exit_code == 2
    payload = json.loads(result.output)
    assert payload["error"] == "InputParseError"
    assert (payload["line"], payload["column"]) == (2, 3)


def test_iso_command(run, write_input):
    other = write_input("other.txt", TRANSITIVE)
    result = run("tournament", "iso", "@", other, text=TRANSITIVE)
    assert json.loads(result.output) == {"isomorphic": True}


def test_bijoin_command(run):
    payload = json.loads(run("bijoin", "@", "--set", "0 3", text=P4).output)
    assert payload["C"] == [1]
    assert payload["D"] == [2]
    assert json.loads(run("bijoin", "@", "--set", "0,2", text=P4).output) is None


def test_bench_command(run):
    result = run("bench", "--operation", "mu", "--size", "20", "--size", "30")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "operation,kind,n,seconds"
    assert lines[1].startswith("mu,graph,20,")
    assert lines[2].startswith("mu,graph,30,")
