import json

import pytest

from umod.errors import InputParseError, PreconditionError
from umod.io import dumps, error_payload, parse_input, parse_text, partition_text, tree_text
from umod.refine import Partition
from umod.relation import SENTINEL, HomogeneousRelation, Tournament, TwoStructure, UndirectedGraph
from umod.bipartitive import build_umodular_tree


def parse_error(text):
    with pytest.raises(InputParseError) as info:
        parse_text(text, source="case.txt")
    return info.value


def test_graph_document(p4):
    doc = parse_text("graph 4 3\n0 1\n1 2\n2 3\n")
    assert doc.kind == "graph"
    assert doc.size == 4
    assert doc.structure == p4


def test_comments_blank_lines_and_labels():
    doc = parse_text("# hi\n\ngraph 3 1 # header\nlabels a b c\n0 2\n")
    assert doc.labels == ["a", "b", "c"]
    assert doc.structure == UndirectedGraph.from_edges(3, [(0, 2)])
    assert doc.relation().ground.labels == ("a", "b", "c")


def test_tournament_document(cycle3):
    doc = parse_text("tournament 3\n0 1 0\n0 0 1\n1 0 0\n")
    assert isinstance(doc.structure, Tournament)
    assert doc.structure == cycle3


def test_relation_document_is_normalized():
    H = parse_text("relation 3\n9 5 5\n7 9 8\n1 1 0\n").structure
    assert isinstance(H, HomogeneousRelation)
    assert H.classes[1].tolist() == [0, SENTINEL, 1]


def test_twostructure_document():
    doc = parse_text("twostructure 2\n0 3\n1 0\n")
    assert isinstance(doc.structure, TwoStructure)
    assert doc.relation().n == 2


def test_bad_header():
    err = parse_error("forest 3\n")
    assert err.line == 1
    assert err.reason.startswith("malformed header")
    assert parse_error("graph 3\n").reason.startswith("malformed header")


def test_non_integer_token():
    err = parse_error("graph 3 1\n0 x\n")
    assert (err.line, err.column, err.token) == (2, 3, "x")
    assert err.reason.startswith("expected an integer")


def test_out_of_range_vertex():
    err = parse_error("graph 3 1\n0 3\n")
    assert (err.line, err.column, err.token) == (2, 3, "3")


def test_self_loop_and_duplicate_edge():
    assert parse_error("graph 3 1\n1 1\n").reason == "self-loop is not allowed"
    err = parse_error("graph 3 2\n0 1\n1 0\n")
    assert err.line == 3
    assert err.reason == "duplicate edge 0 1"


def test_wrong_edge_count():
    err = parse_error("graph 3 2\n0 1\n")
    assert err.line == 3
    assert parse_error("graph 3 1\n0 1\n1 2\n").line == 3


def test_tournament_diagonal_and_asymmetry():
    err = parse_error("tournament 2\n1 0\n1 0\n")
    assert (err.line, err.column, err.reason) == (2, 1, "diagonal must be 0")
    err = parse_error("tournament 2\n0 1\n1 0\n")
    assert err.line == 3
    assert err.reason.startswith("asymmetric tournament")
    assert parse_error("tournament 2\n0 2\n0 0\n").reason == "tournament entries must be 0 or 1"


def test_short_row_and_bad_labels():
    assert parse_error("relation 2\n0 1\n0\n").reason == "row must hold 2 entries, found 1"
    assert parse_error("graph 2 0\nlabels a a\n").reason.startswith("duplicate label")
    assert parse_error("graph 2 0\nlabels a\n").reason.startswith("labels line must name 2")


def test_negative_colour():
    assert parse_error("twostructure 2\n0 -1\n0 0\n").reason == "colours must be non-negative"


def test_parse_error_payload_and_exit_code():
    err = parse_error("graph 3 1\n0 x\n")
    assert err.exit_code == 2
    assert PreconditionError.exit_code == 3
    payload = json.loads(error_payload(err))
    assert payload == {
        "error": "InputParseError",
        "message": "expected an integer, got 'x'",
        "source": "case.txt",
        "line": 2,
        "column": 3,
        "token": "x",
    }


def test_parse_input_reads_files(write_input, p4):
    path = write_input("p4.txt", "graph 4 3\n0 1\n1 2\n2 3\n")
    doc = parse_input(path)
    assert doc.source == path
    assert doc.structure == p4


def test_dumps_is_sorted_and_stable():
    assert dumps({"b": 1, "a": {2, 1}}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'


def test_text_renderings(p4):
    assert partition_text(Partition.of([[0, 3], [1, 2]])) == "0 3\n1 2"
    assert tree_text(build_umodular_tree(p4)).splitlines() == [
        "size 4",
        "4 prime: 1 2 5",
        "5 prime: 0 3 4",
    ]
