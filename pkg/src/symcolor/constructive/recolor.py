"""Eliminating colors from the blobs of a gadget coloring.

For a removed color c, Index(c) is the set of blobs where c occurs. Every
c-colored blob site is moved to b, the least color that is still used on some
blob, is not itself removed, and occurs in no blob of Index(c). Other sites keep
their colors, and each blob stays injective because b was absent from it.

On an infinite gadget the blobs use infinitely many colors, so b always exists.
A finite truncation can run out of candidates, and that is reported as a
:class:`FiniteObstruction` rather than papered over.

Sites are vertex ids or edge pairs, so the same routine serves edge colorings
whose blobs are the edge bundles {t_i, x}, x in A_i.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from ..colorings import Coloring
from ..errors import FiniteObstruction, PreconditionError
from ..graph import FiniteGraph, edge_key


def _get(c: Coloring, site):
    if isinstance(site, tuple):
        return c.edge[edge_key(*site)]
    return c.vertex[site]


def color_elimination_recolor(g: FiniteGraph, f: Coloring, removed: Iterable[int],
                              blobs: Sequence[Sequence]) -> Coloring:
    removed = sorted(set(removed))
    colors = [[_get(f, s) for s in blob] for blob in blobs]
    for i, cs in enumerate(colors):
        if len(set(cs)) != len(cs):
            raise PreconditionError(f"blob {i} is not injectively colored: {cs}")
    for c in removed:
        index = [i for i, cs in enumerate(colors) if c in cs]
        if not index:
            continue
        blocked = set().union(*(colors[i] for i in index))
        candidates = set().union(*map(set, colors)) - blocked - set(removed)
        if not candidates:
            raise FiniteObstruction(
                f"cannot eliminate color {c}: every remaining blob color meets blobs {index}")
        b = min(candidates)
        for i in index:
            colors[i] = [b if x == c else x for x in colors[i]]
    vertex = dict(f.vertex) if f.vertex is not None else None
    edge = dict(f.edge) if f.edge is not None else None
    for blob, cs in zip(blobs, colors):
        for s, x in zip(blob, cs):
            if isinstance(s, tuple):
                edge[edge_key(*s)] = x
            else:
                vertex[s] = x
    return Coloring(f.kind, vertex, edge)


def blob_edge_bundles(g: FiniteGraph, blobs: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """For blob vertex groups, the edges from each blob vertex to its hub."""
    out = []
    for blob in blobs:
        members = set(blob)
        out.append([edge_key(x, y) for x in blob for y in g.adjacency[x] if y not in members])
    return out
