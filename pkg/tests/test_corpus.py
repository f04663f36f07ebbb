import pytest

from symcolor.corpus import (RULES, all_connected_graphs, bound_check_corpus, ceil_sqrt, connected_graphs,
                             is_c5, is_odd_cycle)
from symcolor.graph import from_edge_list


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_isomorphism_class_counts(n, count):
    gs = connected_graphs(n)
    assert len(gs) == count
    assert all(g.is_connected() and g.order == n for g in gs)


def test_ceil_sqrt():
    assert [ceil_sqrt(d) for d in range(1, 11)] == [1, 2, 2, 2, 3, 3, 3, 3, 3, 4]


def test_predicates():
    c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    assert is_c5(c5) and is_odd_cycle(c5)
    assert not is_odd_cycle(from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))


def test_flags_only_known_exceptions():
    report = bound_check_corpus(all_connected_graphs(5), ["brooks", "odd"])
    assert not report.violations
    odd = [e for e in report.exceptions if e.rule == "odd"]
    assert len(odd) == 1 and is_c5(odd[0].graph) and odd[0].value == 5
    brooks = {e.graph.order for e in report.exceptions if e.rule == "brooks"}
    assert brooks == {1, 2, 3, 4, 5}


def test_restriction_declared():
    report = bound_check_corpus(all_connected_graphs(4), list(RULES), distinguishing_max_order=3)
    doc = report.to_json()
    assert doc["restrictions"] and "kpw" in doc["restrictions"][0]
    assert doc["counts"]["kpw"]["skipped"] == 6


def test_violation_is_reported():
    fake = RULES["vizing"].__class__("tight", RULES["vizing"].parameter, lambda d: d, "Delta")
    report = bound_check_corpus(all_connected_graphs(3), [fake])
    assert {e.graph.n_edges for e in report.violations} == {3}  # K3 needs 3 edge colors
