"""Layered colorings of locally finite graphs, certified some layers ahead.

To color layers 0..d the search runs on layers 0..d+lookahead and keeps the
prefix. Sites are ordered layer by layer, so backtracking runs back across layer
boundaries in order. A vertex whose neighborhood reaches past the searched
depth is open: the odd condition is not enforced there, since its neighborhood
is incomplete.

If some finite depth has no valid coloring at all, the graph has none, and the
least such depth is reported.
"""
from __future__ import annotations

from ..colorings import Coloring, Kind, Notion
from ..errors import PreconditionError, RefutationError
from ..graph import GeneratorGraph, Truncation, truncate_layers
from ..solvers import DEFAULT_NODE_BUDGET, ColoringProblem, site_order

SUPPORTED = {Notion.PROPER_VERTEX: Kind.VERTEX, Notion.ODD: Kind.VERTEX, Notion.TOTAL: Kind.TOTAL}


def open_vertices(g: GeneratorGraph, depth: int) -> set[int]:
    """Vertices of the depth-``depth`` truncation that gain neighbors one layer deeper."""
    inner = truncate_layers(g, depth).graph
    outer = truncate_layers(g, depth + 1).graph
    return {v for v in range(inner.order) if inner.degree(v) != outer.degree(v)}


def _solve(g: GeneratorGraph, t: Truncation, depth: int, palette: int, notion: Notion, budget: int):
    graph = t.graph
    kind = SUPPORTED[notion]
    exempt = open_vertices(g, depth) if notion is Notion.ODD else ()
    problem = ColoringProblem(graph, kind, notion, sites=site_order(graph, kind, list(range(graph.order))),
                              odd_exempt=exempt)
    colors, _ = problem.solve(palette, budget)
    return None if colors is None else problem.to_coloring(colors)


def restrict(c: Coloring, n_vertices: int) -> Coloring:
    """The coloring induced on vertex ids ``0..n_vertices-1``."""
    vertex = {v: x for v, x in c.vertex.items() if v < n_vertices} if c.vertex is not None else None
    edge = {e: x for e, x in c.edge.items() if e[1] < n_vertices} if c.edge is not None else None
    return Coloring(c.kind, vertex, edge)


def compactness_extend(g: GeneratorGraph, palette: int, notion: Notion | str, depth: int,
                       lookahead: int = 0, budget: int = DEFAULT_NODE_BUDGET) -> Coloring:
    notion = Notion(notion)
    if notion not in SUPPORTED:
        raise PreconditionError(f"notion {notion.value} is not supported; use proper-vertex, odd or total")
    if depth < 0 or lookahead < 0:
        raise PreconditionError("depth and lookahead must be non-negative")
    far = depth + lookahead
    t = truncate_layers(g, far)
    found = _solve(g, t, far, palette, notion, budget)
    if found is None:
        for m in range(far + 1):
            if _solve(g, truncate_layers(g, m), m, palette, notion, budget) is None:
                raise RefutationError(f"no {notion.value} coloring with {palette} colors at depth {m}", depth=m)
        raise RefutationError(f"no {notion.value} coloring with {palette} colors at depth {far}", depth=far)
    keep = sum(t.layer_sizes[:depth + 1])
    return restrict(found, keep)
