import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symcolor.autgroup import AutomorphismSet, enumerate_automorphisms
from symcolor.colorings import Coloring, ListAssignment, total_coloring
from symcolor.dot import from_dot, to_dot
from symcolor.errors import ColoringDomainError, GraphError
from symcolor.gadgets import GadgetKind, GadgetSpec, realize
from symcolor.graph import FiniteGraph, from_edge_list

graphs = st.integers(1, 8).flatmap(lambda n: st.builds(
    lambda pairs: from_edge_list(n, [(u, v) for u, v in pairs if u != v]),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20)))


@given(graphs)
def test_graph_json_round_trip(g):
    assert FiniteGraph.from_json(json.loads(g.dumps())) == g


@given(graphs)
def test_dot_round_trip(g):
    assert from_dot(to_dot(g)) == g


@pytest.mark.parametrize("kind", list(GadgetKind))
def test_gadget_labels_survive_dot(kind):
    g = realize(GadgetSpec(kind, 2, 3))
    back = from_dot(to_dot(g))
    assert back == g and back.labels == g.labels


def test_bad_dot():
    with pytest.raises(GraphError):
        from_dot("digraph G { 0 -> 1; }")
    with pytest.raises(GraphError, match="unsupported"):
        from_dot("graph G {\n 0 -- 1 -- 2;\n}")


def test_graph_json_schema_error():
    with pytest.raises(GraphError, match="schema mismatch"):
        FiniteGraph.from_json({"edges": []})


def test_coloring_round_trip():
    c = total_coloring([0, 1, 2], {(0, 1): 2, (2, 1): 0})
    doc = c.to_json()
    assert doc["edge"] == [[0, 1, 2], [1, 2, 0]]
    assert Coloring.from_json(json.loads(json.dumps(doc))) == c


def test_coloring_schema_error():
    with pytest.raises(ColoringDomainError, match="schema mismatch"):
        Coloring.from_json({"kind": "vertex", "vertex": {"0": "x"}})


def test_lists_round_trip():
    L = ListAssignment({0: {1, 2}, 1: {3, 4}}, 2)
    assert ListAssignment.from_json(json.loads(json.dumps(L.to_json()))) == L
    with pytest.raises(ValueError):
        ListAssignment({0: {1}}, 2)


def test_automorphisms_round_trip():
    a = enumerate_automorphisms(from_edge_list(3, [(0, 1), (1, 2)]))
    assert AutomorphismSet.from_json(json.loads(json.dumps(a.to_json()))) == a
