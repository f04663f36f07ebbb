import random

import pytest

from symcolor.autgroup import (automorphisms_bruteforce, compose, enumerate_automorphisms, fixed_vertices,
                               inverse, orbits, preserves, refine_colors)
from symcolor.colorings import edge_coloring, total_coloring, vertex_coloring
from symcolor.corpus import all_connected_graphs
from symcolor.errors import ColoringDomainError, ResourceLimitError
from symcolor.gadgets import GadgetSpec, realize, spine
from symcolor.graph import from_edge_list


def complete(n):
    return from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def test_small_examples():
    assert len(enumerate_automorphisms(complete(3))) == 6
    p3 = enumerate_automorphisms(from_edge_list(3, [(0, 1), (1, 2)]))
    assert set(p3.members) == {(0, 1, 2), (2, 1, 0)}


def test_oracle_equivalence_connected_up_to_6():
    for g in all_connected_graphs(6):
        assert enumerate_automorphisms(g) == automorphisms_bruteforce(g)


def test_oracle_equivalence_random_order_7():
    rng = random.Random(11)
    for _ in range(40):
        n = 7
        g = from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.4])
        assert enumerate_automorphisms(g) == automorphisms_bruteforce(g)


def test_disconnected_and_edgeless():
    empty3 = from_edge_list(3, [])
    assert len(enumerate_automorphisms(empty3)) == 6
    assert orbits(enumerate_automorphisms(empty3)) == [{0, 1, 2}]
    two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
    assert enumerate_automorphisms(two_k2) == automorphisms_bruteforce(two_k2)


def test_group_axioms_on_corpus():
    for g in all_connected_graphs(5):
        a = enumerate_automorphisms(g)
        assert a.is_group()


def test_compose_inverse():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, inverse(p)) == (0, 1, 2)
    assert compose(p, q) == (1, 0, 2)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_gadget_g_group(N):
    g = realize(GadgetSpec("g", 2, N + 1))
    a = enumerate_automorphisms(g)
    assert len(a) == 2 ** (N + 1)
    assert fixed_vertices(a) == set(spine(g))
    blobs = [o for o in orbits(a) if len(o) > 1]
    assert sorted(sorted(g.labels[v] for v in o) for o in blobs) == \
        [[f"a{i}_1", f"a{i}_2"] for i in range(N + 1)]


def test_gadget_g_blob3():
    g = realize(GadgetSpec("g", 3, 3))
    assert len(enumerate_automorphisms(g)) == 6 ** 3


def test_asymmetric_tree():
    # degrees 1,1,1,1,2,4: a spider with legs 1,1,1,2
    tree = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
    a = enumerate_automorphisms(tree)
    assert len(a) == 6  # the three unit legs permute
    asym = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (6, 5)][:6] + [(1, 6)])
    assert enumerate_automorphisms(asym) == automorphisms_bruteforce(asym)
    rigid = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])
    assert fixed_vertices(enumerate_automorphisms(rigid)) == set(range(7))


def test_k2_fixes_nothing():
    assert fixed_vertices(enumerate_automorphisms(complete(2))) == set()


def test_orbits_refine_degree_partition():
    for g in all_connected_graphs(5):
        for orb in orbits(enumerate_automorphisms(g)):
            assert len({g.degree(v) for v in orb}) == 1


def test_refinement_is_invariant():
    for g in all_connected_graphs(5):
        cls = refine_colors(g)
        for p in enumerate_automorphisms(g):
            assert all(cls[p[v]] == cls[v] for v in range(g.order))


def test_budget():
    with pytest.raises(ResourceLimitError):
        enumerate_automorphisms(from_edge_list(7, []), budget=100)


def test_preserves():
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert preserves((2, 3, 0, 1), vertex_coloring([1, 2, 1, 2]))
    assert not preserves((1, 0), vertex_coloring([1, 2]))
    assert preserves((0, 1, 2, 3), vertex_coloring([5, 6, 7, 8]))
    h = edge_coloring({e: i for i, e in enumerate(c4.edges)})
    assert not preserves((1, 2, 3, 0), h)
    t = total_coloring([0, 0, 0, 0], {e: 0 for e in c4.edges})
    assert preserves((1, 2, 3, 0), t)
    with pytest.raises(ColoringDomainError):
        preserves((0, 1, 2), vertex_coloring([1, 2]))
