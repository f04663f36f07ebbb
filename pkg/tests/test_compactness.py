import pytest

from symcolor.colorings import Kind, Notion, verify_structural
from symcolor.constructive.compactness import compactness_extend, open_vertices, restrict
from symcolor.errors import PreconditionError, RefutationError
from symcolor.gadgets import GadgetSpec, generate
from symcolor.graph import truncate_layers


def closed_part_valid(gen, c, depth):
    """Proper on the depth truncation, odd at every vertex whose neighborhood is complete."""
    t = truncate_layers(gen, depth).graph
    c = restrict(c, t.order)
    if not verify_structural(t, c, Notion.PROPER_VERTEX).valid:
        return False
    exempt = open_vertices(gen, depth)
    for v in range(t.order):
        if v in exempt or not t.adjacency[v]:
            continue
        seen = [c.vertex[u] for u in t.adjacency[v]]
        if not any(seen.count(x) % 2 for x in set(seen)):
            return False
    return True


def test_odd_on_g1_with_lookahead():
    gen = generate(GadgetSpec("g1", 2))
    for d in range(1, 11):
        c = compactness_extend(gen, 8, Notion.ODD, d, lookahead=2)
        assert len(c.vertex) == truncate_layers(gen, d).graph.order
        assert closed_part_valid(gen, c, d)
        assert closed_part_valid(gen, c, d - 1)


def test_proper_two_colors_refuted_at_first_triangle():
    gen = generate(GadgetSpec("g1", 2))
    with pytest.raises(RefutationError) as info:
        compactness_extend(gen, 2, Notion.PROPER_VERTEX, 3)
    assert info.value.depth == 1  # t0 and the first blob form a triangle


def test_total_coloring():
    gen = generate(GadgetSpec("g1", 2))
    c = compactness_extend(gen, 5, Notion.TOTAL, 4, lookahead=1)
    assert c.kind is Kind.TOTAL
    t = truncate_layers(gen, 4).graph
    assert verify_structural(t, c, Notion.TOTAL).valid


def test_open_vertices_are_the_frontier():
    gen = generate(GadgetSpec("g1", 2))
    t = truncate_layers(gen, 3)
    opened = open_vertices(gen, 3)
    assert opened and all(t.layer_of[v] == 3 for v in opened)


def test_bad_arguments():
    gen = generate(GadgetSpec("g1", 2))
    with pytest.raises(PreconditionError):
        compactness_extend(gen, 3, Notion.ND_VERTEX, 2)
    with pytest.raises(PreconditionError):
        compactness_extend(gen, 3, Notion.ODD, -1)
