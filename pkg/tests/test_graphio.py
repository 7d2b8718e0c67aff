import json

import pytest
from hypothesis import given, settings

from atomgraph.graph import Graph, bowtie_graph, cycle_graph
from atomgraph.graphio import (from_dimacs, graph_from_dict, graph_to_dict, load_graph,
                               parse_graph, to_dimacs)

from test_graph import graphs


def test_json_shape():
    assert graph_to_dict(cycle_graph(3)) == {
        "vertices": ["0", "1", "2"], "edges": [["0", "1"], ["0", "2"], ["1", "2"]]}


def test_dimacs_text():
    g = Graph.from_index_edges(3, [(0, 1), (1, 2)], labels=["1", "2", "3"])
    assert to_dimacs(g) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_dimacs_preserves_labels():
    g = bowtie_graph()
    back = from_dimacs(to_dimacs(g))
    assert back.labels == g.labels and back.edges() == g.edges()


def test_dimacs_default_labels_are_one_based():
    g = from_dimacs("c a comment\np edge 3 1\ne 1 3\n")
    assert g.labels == ("1", "2", "3") and g.edges() == [(0, 2)]


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "p edge 2 1\ne 1 5\n",
    "p edge 2\n",
    "p edge 2 1\nx 1 2\n",
])
def test_dimacs_errors(text):
    with pytest.raises(ValueError):
        from_dimacs(text)


@pytest.mark.parametrize("obj", [[], {"edges": []}, {"vertices": "ab"}, {"vertices": ["a"], "edges": [["a"]]}])
def test_json_errors(obj):
    with pytest.raises(ValueError):
        graph_from_dict(obj)


def test_parse_graph_sniffs_format():
    g = cycle_graph(4)
    assert parse_graph(json.dumps(graph_to_dict(g))) == g
    assert parse_graph("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n").edges() == g.edges()


def test_load_graph(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(graph_to_dict(bowtie_graph())))
    assert load_graph(str(path)) == bowtie_graph()


@given(graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_round_trips(g):
    assert graph_from_dict(json.loads(json.dumps(graph_to_dict(g)))) == g
    back = from_dimacs(to_dimacs(g))
    assert back.labels == g.labels and back.edges() == g.edges()
