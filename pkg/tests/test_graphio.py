from __future__ import annotations

import json

import pytest

from clawham.constructions import cycle_graph, petersen_graph
from clawham.errors import GraphInputError
from clawham.graph import FiniteGraph
from clawham.graphio import (
    graph_from_edge_list,
    graph_to_dot,
    graph_to_edge_list,
    graph_to_json,
    parse_graph,
)


def test_json_roundtrip():
    g = petersen_graph()
    assert parse_graph(graph_to_json(g)) == g


def test_edge_list_roundtrip_with_isolated_vertices():
    g = FiniteGraph([0, 1, 2, 7], [(0, 1), (1, 2)])
    text = graph_to_edge_list(g)
    assert parse_graph(text) == g


def test_edge_list_comments_and_blanks():
    g = graph_from_edge_list("# a triangle\n0 1\n\n1 2 # chord end\n0 2\n")
    assert g == cycle_graph(3)


def test_parse_errors():
    with pytest.raises(GraphInputError):
        parse_graph("{bad json")
    with pytest.raises(GraphInputError):
        parse_graph('{"vertices": [0, 1]}')
    with pytest.raises(GraphInputError):
        parse_graph("0 1 2\n")
    with pytest.raises(GraphInputError):
        parse_graph("0 zero\n")


def test_dot_output():
    g = FiniteGraph([0, 1, 2, 3], [(0, 1)])
    dot = graph_to_dot(g, highlight_edges=[(0, 1)])
    assert dot.startswith("graph G {")
    assert "0 -- 1 [style=bold" in dot
    assert "  2;" in dot and "  3;" in dot


def test_json_output_is_deterministic():
    g = petersen_graph()
    assert graph_to_json(g) == graph_to_json(parse_graph(graph_to_json(g)))
    obj = json.loads(graph_to_json(g))
    assert obj["vertices"] == sorted(obj["vertices"])
