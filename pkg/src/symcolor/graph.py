"""Finite graphs, layered generators for locally finite graphs, and BFS structure.

Vertex ids are positions in generation order; for truncations of a generator
that order is layer by layer, so ascending id doubles as a fixed well-ordering
of the vertex set.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import GeneratorContractError, GraphError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FiniteGraph:
    """Immutable simple undirected graph on vertices ``0..order-1``."""

    order: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    _adjsets: tuple[frozenset, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        object.__setattr__(self, "_adjsets", tuple(frozenset(a) for a in self.adjacency))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.order) for v in self.adjacency[u] if u < v)

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def max_degree(self) -> int:
        return max_degree(self)

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return len(_bfs_order(self, 0)) == self.order

    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def induced_prefix(self, n: int) -> FiniteGraph:
        """Induced subgraph on ids ``0..n-1`` (a shallower truncation)."""
        edges = [(u, v) for u, v in self.edges if v < n]
        return from_edge_list(n, edges, self.labels[:n])

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "edges": [list(e) for e in self.edges],
            "labels": {str(i): lab for i, lab in enumerate(self.labels)},
        }

    @classmethod
    def from_json(cls, doc: dict) -> FiniteGraph:
        try:
            order = int(doc["order"])
            edges = [tuple(e) for e in doc["edges"]]
            raw = doc.get("labels") or {}
        except (KeyError, TypeError) as exc:
            raise GraphError(f"schema mismatch: graph document lacks {exc}") from exc
        labels = [raw.get(str(i), str(i)) for i in range(order)]
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"schema mismatch: edge {list(e)} is not a pair")
        return from_edge_list(order, edges, labels)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def from_edge_list(order: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> FiniteGraph:
    if order < 0:
        raise GraphError(f"negative order {order}")
    adj: list[set[int]] = [set() for _ in range(order)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphError(f"loop at {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge {{{u},{v}}} references a vertex outside 0..{order - 1}")
        adj[u].add(v)
        adj[v].add(u)
    if labels is None:
        labels = [str(i) for i in range(order)]
    elif len(labels) != order:
        raise GraphError(f"{len(labels)} labels for {order} vertices")
    return FiniteGraph(order, tuple(tuple(sorted(a)) for a in adj), tuple(str(s) for s in labels))


def max_degree(g: FiniteGraph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def _bfs_order(g: FiniteGraph, root: int) -> list[int]:
    seen = [False] * g.order
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def _require_connected(g: FiniteGraph, reached: Sequence[int]):
    if len(reached) != g.order:
        missing = min(set(range(g.order)) - set(reached))
        raise GraphError(f"graph is disconnected: vertex {missing} is unreachable")


@dataclass(frozen=True)
class BfsTree:
    root: int
    parent: dict[int, int]
    order: tuple[int, ...]

    def children(self) -> dict[int, list[int]]:
        """Tree children of every vertex, listed in BFS order."""
        kids: dict[int, list[int]] = {v: [] for v in self.order}
        for v in self.order[1:]:
            kids[self.parent[v]].append(v)
        return kids

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def siblings(self, v: int) -> list[int]:
        if v == self.root:
            return []
        p = self.parent[v]
        return [w for w in self.order if w != v and self.parent.get(w) == p]

    def edges(self) -> set[Edge]:
        return {edge_key(v, p) for v, p in self.parent.items()}


def bfs_tree(g: FiniteGraph, root: int) -> BfsTree:
    """BFS spanning tree; neighbors are expanded in ascending id."""
    if not 0 <= root < g.order:
        raise GraphError(f"root {root} outside 0..{g.order - 1}")
    parent: dict[int, int] = {}
    seen = [False] * g.order
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
                queue.append(w)
    _require_connected(g, order)
    return BfsTree(root, parent, tuple(order))


def distances(g: FiniteGraph, root: int) -> list[int]:
    dist = [-1] * g.order
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def levels(g: FiniteGraph, root: int) -> list[frozenset[int]]:
    """Distance layers ``N^n(root)`` for n = 0, 1, ..."""
    dist = distances(g, root)
    if -1 in dist:
        raise GraphError(f"graph is disconnected: vertex {dist.index(-1)} is unreachable")
    out: list[set[int]] = [set() for _ in range(max(dist) + 1)]
    for v, d in enumerate(dist):
        out[d].add(v)
    return [frozenset(s) for s in out]


# -- generators ---------------------------------------------------------------

Layer = tuple[list[str], list[tuple[str, str]]]


@dataclass(frozen=True)
class GeneratorGraph:
    """Layer-by-layer description of a connected, locally finite graph.

    ``layer(n)`` returns the labels of layer ``n`` (graph distance ``n`` from the
    root) together with every edge joining layer ``n`` to layers ``n-1`` or ``n``.
    ``horizon`` is the last non-empty layer, or None when the graph is meant to be
    infinite; in that case callers always pass an explicit depth.
    """

    root: str
    layer: Callable[[int], Layer]
    degree_bound: int
    horizon: int | None = None
    name: str = ""

    def layer_at(self, n: int) -> Layer:
        if self.horizon is not None and n > self.horizon:
            return [], []
        if n == 0:
            return [self.root], []
        return self.layer(n)


@dataclass(frozen=True)
class Truncation:
    graph: FiniteGraph
    layer_of: tuple[int, ...]
    layer_sizes: tuple[int, ...]


def truncate_layers(g: GeneratorGraph, depth: int) -> Truncation:
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    ids: dict[str, int] = {}
    labels: list[str] = []
    layer_of: list[int] = []
    edges: list[tuple[int, int]] = []
    sizes: list[int] = []
    for n in range(depth + 1):
        names, layer_edges = g.layer_at(n)
        if n == 0 and names != [g.root]:
            raise GeneratorContractError("layer 0 must be exactly the root")
        if not names:
            if layer_edges:
                raise GeneratorContractError(f"empty layer {n} emitted edges")
            break
        for name in names:
            if name in ids:
                raise GeneratorContractError(f"label {name!r} emitted twice")
            ids[name] = len(labels)
            labels.append(name)
            layer_of.append(n)
        has_parent = {name: n == 0 for name in names}
        for a, b in layer_edges:
            if a not in ids or b not in ids:
                raise GeneratorContractError(f"edge {a}-{b} in layer {n} names an unknown vertex")
            la, lb = layer_of[ids[a]], layer_of[ids[b]]
            if max(la, lb) != n or abs(la - lb) > 1:
                raise GeneratorContractError(
                    f"edge {a}-{b} joins layers {la} and {lb} while emitting layer {n}")
            if la != lb:
                has_parent[a if la == n else b] = True
            edges.append((ids[a], ids[b]))
        orphans = [name for name, ok in has_parent.items() if not ok]
        if orphans:
            raise GeneratorContractError(f"vertex {orphans[0]!r} in layer {n} has no neighbor in layer {n - 1}")
        sizes.append(len(names))
    graph = from_edge_list(len(labels), edges, labels)
    worst = max_degree(graph)
    if worst > g.degree_bound:
        raise GeneratorContractError(f"degree {worst} exceeds declared bound {g.degree_bound}")
    return Truncation(graph, tuple(layer_of), tuple(sizes))


def truncate(g: GeneratorGraph, depth: int) -> FiniteGraph:
    """Induced subgraph on layers ``0..depth``, ids assigned in emission order."""
    return truncate_layers(g, depth).graph


def find_ray(g: GeneratorGraph, depth: int) -> list[int]:
    """A path root = v0, ..., v_depth with v_n in layer n.

    Walks BFS parent links back from the least id of the deepest layer.
    """
    t = truncate_layers(g, depth)
    if len(t.layer_sizes) <= depth:
        raise GraphError(f"layer {len(t.layer_sizes)} is empty; no ray of length {depth}")
    tree = bfs_tree(t.graph, 0)
    v = min(i for i, n in enumerate(t.layer_of) if n == depth)
    path = [v]
    while v != 0:
        v = tree.parent[v]
        path.append(v)
    return path[::-1]
