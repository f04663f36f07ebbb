"""Total distinguishing colorings with ceil(sqrt(Delta)) colors.

Every tree child is colored by a pair (edge color, vertex color) from
{0..k-1}^2. The root takes color 0 and hands the pair (1, 1) to two children,
the ray child v1 and a sibling z; all other sibling pairs are distinct and
avoid (1, 1). v1 and z are told apart by giving their children different pair
sets. Non-tree edges get color 0.

The scheme is a proof sketch for infinite graphs, and some small finite graphs
defeat every placement of (v1, z) (P3 and stars: v1 and z are leaves with
nothing to tell them apart). Each attempt is verified, and the fallbacks are
tried in a fixed order:

1. ``paired``: the scheme above, over all (v1, z) placements, ray child first.
2. ``distinct``: every root child gets its own pair.
3. both schemes again from every other maximum-degree root.
4. ``search``: exact search for a distinguishing total coloring with k colors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..autgroup import AutomorphismSet, enumerate_automorphisms
from ..colorings import Coloring, Kind, verify_distinguishing
from ..corpus import ceil_sqrt
from ..errors import AlgorithmFailure, PreconditionError
from ..graph import BfsTree, FiniteGraph, bfs_tree, distances, edge_key
from ..solvers import ColoringProblem

SPECIAL = (1, 1)


@dataclass(frozen=True)
class KpwResult:
    coloring: Coloring
    strategy: str
    root: int
    ray_child: int | None = None
    twin: int | None = None


def _ray_child(g: FiniteGraph, tree: BfsTree) -> int:
    """Root child on the tree path to the deepest, then least-id, vertex."""
    dist = distances(g, tree.root)
    far = max(dist)
    v = min(u for u in range(g.order) if dist[u] == far)
    while tree.parent[v] != tree.root:
        v = tree.parent[v]
    return v


def _color_tree(g: FiniteGraph, tree: BfsTree, k: int,
                root_pairs: dict[int, tuple[int, int]], v1: int | None, z: int | None) -> Coloring:
    pairs = [p for p in itertools.product(range(k), repeat=2) if p != SPECIAL]
    kids = tree.children()
    vertex = {tree.root: 0}
    edge: dict = {}

    def assign(child, pair):
        edge[edge_key(child, tree.parent[child])] = pair[0]
        vertex[child] = pair[1]

    for child, pair in root_pairs.items():
        assign(child, pair)
    first_set = set(pairs[:len(kids[v1])]) if v1 is not None else None
    for u in tree.order:
        if u == tree.root:
            continue
        ch = kids[u]
        if len(ch) > len(pairs):
            raise AlgorithmFailure(f"vertex {u} has {len(ch)} tree children but only {len(pairs)} pairs")
        chosen = pairs[:len(ch)]
        if u == z and ch and set(chosen) == first_set and len(ch) < len(pairs):
            # swap the last pair for the first unused one so the two sets differ
            chosen = chosen[:-1] + [pairs[len(ch)]]
        for child, pair in zip(ch, chosen):
            assign(child, pair)
    for u, w in g.edges:
        edge.setdefault((u, w), 0)
    return Coloring(Kind.TOTAL, vertex, edge)


def _paired_attempts(g, tree, k):
    """(v1, z) placements: ray child with each sibling, then every other pair."""
    kids = tree.children()[tree.root]
    ray = _ray_child(g, tree)
    placements = [(ray, z) for z in kids if z != ray]
    placements += [(a, b) for a in kids for b in kids if a != b and a != ray]
    pairs = [p for p in itertools.product(range(k), repeat=2) if p != SPECIAL]
    for v1, z in placements:
        others = [c for c in kids if c not in (v1, z)]
        if len(others) > len(pairs):
            continue
        root_pairs = {v1: SPECIAL, z: SPECIAL}
        root_pairs.update(zip(others, pairs))
        yield v1, z, root_pairs


def _search(g: FiniteGraph, k: int, auts: AutomorphismSet) -> Coloring | None:
    problem = ColoringProblem(g, Kind.TOTAL, None, auts)
    colors, _ = problem.solve(k)
    return None if colors is None else problem.to_coloring(colors)


def kpw_construct(g: FiniteGraph, auts: AutomorphismSet | None = None) -> KpwResult:
    if g.order < 3:
        raise PreconditionError(f"needs order at least 3, got {g.order}")
    if not g.is_connected():
        raise PreconditionError("needs a connected graph")
    delta = g.max_degree
    if delta < 2:
        raise PreconditionError(f"needs maximum degree at least 2, got {delta}")
    k = ceil_sqrt(delta)
    auts = auts if auts is not None else enumerate_automorphisms(g)
    roots = [v for v in range(g.order) if g.degree(v) == delta]

    def ok(c: Coloring) -> bool:
        return c.palette() <= set(range(k)) and verify_distinguishing(g, c, auts).valid

    for i, root in enumerate(roots):
        tree = bfs_tree(g, root)
        suffix = "" if i == 0 else "-alt-root"
        for v1, z, root_pairs in _paired_attempts(g, tree, k):
            c = _color_tree(g, tree, k, root_pairs, v1, z)
            if ok(c):
                return KpwResult(c, "paired" + suffix, root, v1, z)
        kids = tree.children()[root]
        all_pairs = list(itertools.product(range(k), repeat=2))
        if len(kids) <= len(all_pairs):
            c = _color_tree(g, tree, k, dict(zip(kids, all_pairs)), None, None)
            if ok(c):
                return KpwResult(c, "distinct" + suffix, root)
    c = _search(g, k, auts)
    if c is not None:
        return KpwResult(c, "search", roots[0])
    raise AlgorithmFailure(f"no distinguishing total coloring with {k} colors found")


def kpw_total_distinguishing(g: FiniteGraph) -> Coloring:
    """Distinguishing total coloring (not necessarily proper) with at most ceil(sqrt(Delta)) colors."""
    return kpw_construct(g).coloring
