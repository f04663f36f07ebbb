import pytest

from symcolor.autgroup import enumerate_automorphisms
from symcolor.colorings import verify_distinguishing
from symcolor.constructive.kpw import SPECIAL, kpw_construct, kpw_total_distinguishing
from symcolor.corpus import all_connected_graphs, ceil_sqrt
from symcolor.errors import PreconditionError
from symcolor.gadgets import GadgetKind, GadgetSpec, realize
from symcolor.graph import bfs_tree, edge_key, from_edge_list


def check(g, c):
    k = ceil_sqrt(g.max_degree)
    assert c.palette() <= set(range(k))
    assert verify_distinguishing(g, c, enumerate_automorphisms(g)).valid


def test_small_corpus_order_3_to_5():
    for g in all_connected_graphs(5, 3):
        check(g, kpw_total_distinguishing(g))


@pytest.mark.parametrize("kind", list(GadgetKind))
def test_gadgets(kind):
    for h in (1, 2, 3):
        g = realize(GadgetSpec(kind, 2, h))
        check(g, kpw_total_distinguishing(g))


def test_paired_strategy_keeps_special_pair():
    g = realize(GadgetSpec("g", 2, 3))
    r = kpw_construct(g)
    assert r.strategy == "paired"
    c = r.coloring
    for u in (r.ray_child, r.twin):
        assert (c.edge[edge_key(u, r.root)], c.vertex[u]) == SPECIAL
    tree = bfs_tree(g, r.root)
    others = [w for w in tree.children()[r.root] if w not in (r.ray_child, r.twin)]
    got = [(c.edge[edge_key(w, r.root)], c.vertex[w]) for w in others]
    assert SPECIAL not in got and len(set(got)) == len(got)


def test_p3_and_stars_fall_back():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    r = kpw_construct(p3)
    assert r.strategy != "paired"
    check(p3, r.coloring)
    star = from_edge_list(5, [(0, i) for i in range(1, 5)])
    check(star, kpw_total_distinguishing(star))


def test_preconditions():
    with pytest.raises(PreconditionError):
        kpw_construct(from_edge_list(2, [(0, 1)]))
    with pytest.raises(PreconditionError):
        kpw_construct(from_edge_list(4, [(0, 1), (2, 3)]))
