"""Coloring containers, list assignments and verifiers.

Every verifier returns a :class:`VerificationReport` rather than raising on a
bad coloring; exceptions are reserved for inputs that cannot be judged at all
(wrong kind, sites missing or extra).
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .autgroup import AutomorphismSet, preserves
from .errors import ColoringDomainError
from .graph import Edge, FiniteGraph, edge_key

Site = Union[int, Edge, str]


class Kind(enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    TOTAL = "total"

    @property
    def has_vertices(self) -> bool:
        return self is not Kind.EDGE

    @property
    def has_edges(self) -> bool:
        return self is not Kind.VERTEX


class Notion(enum.Enum):
    PROPER_VERTEX = "proper-vertex"
    PROPER_EDGE = "proper-edge"
    TOTAL = "total"
    ODD = "odd"
    ND_VERTEX = "nd-vertex"
    ND_EDGE = "nd-edge"

    @property
    def kind(self) -> Kind:
        if self in (Notion.PROPER_EDGE, Notion.ND_EDGE):
            return Kind.EDGE
        if self is Notion.TOTAL:
            return Kind.TOTAL
        return Kind.VERTEX


@dataclass(frozen=True)
class Coloring:
    kind: Kind
    vertex: dict[int, int] | None = None
    edge: dict[Edge, int] | None = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind.has_vertices and self.vertex is None:
            raise ColoringDomainError(f"{kind.value} coloring needs vertex colors")
        if kind.has_edges and self.edge is None:
            raise ColoringDomainError(f"{kind.value} coloring needs edge colors")
        if self.edge is not None:
            object.__setattr__(self, "edge", {edge_key(*e): c for e, c in self.edge.items()})

    def palette(self) -> set[int]:
        used = set()
        if self.vertex:
            used |= set(self.vertex.values())
        if self.edge:
            used |= set(self.edge.values())
        return used

    @property
    def n_colors(self) -> int:
        return len(self.palette())

    def renamed(self, mapping: Mapping[int, int]) -> Coloring:
        return Coloring(
            self.kind,
            {v: mapping[c] for v, c in self.vertex.items()} if self.vertex is not None else None,
            {e: mapping[c] for e, c in self.edge.items()} if self.edge is not None else None,
        )

    def with_vertex(self, v: int, color: int) -> Coloring:
        vertex = dict(self.vertex)
        vertex[v] = color
        return Coloring(self.kind, vertex, self.edge)

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind.value}
        if self.vertex is not None:
            doc["vertex"] = {str(v): c for v, c in sorted(self.vertex.items())}
        if self.edge is not None:
            doc["edge"] = [[u, v, c] for (u, v), c in sorted(self.edge.items())]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> Coloring:
        try:
            kind = Kind(doc["kind"])
            vertex = {int(k): int(c) for k, c in doc["vertex"].items()} if "vertex" in doc else None
            edge = {edge_key(int(u), int(v)): int(c) for u, v, c in doc["edge"]} if "edge" in doc else None
        except (KeyError, ValueError, TypeError) as exc:
            raise ColoringDomainError(f"schema mismatch: bad coloring document ({exc})") from exc
        return cls(kind, vertex, edge)


def vertex_coloring(colors: Sequence[int] | Mapping[int, int]) -> Coloring:
    if isinstance(colors, Mapping):
        return Coloring(Kind.VERTEX, dict(colors))
    return Coloring(Kind.VERTEX, dict(enumerate(colors)))


def edge_coloring(colors: Mapping[Edge, int]) -> Coloring:
    return Coloring(Kind.EDGE, edge=dict(colors))


def total_coloring(vertex: Sequence[int] | Mapping[int, int], edge: Mapping[Edge, int]) -> Coloring:
    v = dict(vertex) if isinstance(vertex, Mapping) else dict(enumerate(vertex))
    return Coloring(Kind.TOTAL, v, dict(edge))


@dataclass(frozen=True)
class ListAssignment:
    lists: dict[int, frozenset[int]]
    k: int

    def __post_init__(self):
        lists = {int(v): frozenset(L) for v, L in self.lists.items()}
        object.__setattr__(self, "lists", lists)
        for v, L in lists.items():
            if len(L) != self.k:
                raise ValueError(f"list of vertex {v} has {len(L)} colors, expected {self.k}")

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    @classmethod
    def uniform(cls, order: int, colors: Iterable[int]) -> ListAssignment:
        L = frozenset(colors)
        return cls({v: L for v in range(order)}, len(L))

    def to_json(self) -> dict:
        return {"k": self.k, "lists": {str(v): sorted(L) for v, L in sorted(self.lists.items())}}

    @classmethod
    def from_json(cls, doc: dict) -> ListAssignment:
        try:
            return cls({int(v): frozenset(L) for v, L in doc["lists"].items()}, int(doc["k"]))
        except (KeyError, TypeError) as exc:
            raise ColoringDomainError(f"schema mismatch: bad list assignment ({exc})") from exc


class Violation(NamedTuple):
    site: Site
    reason: str

    def to_json(self) -> dict:
        site = list(self.site) if isinstance(self.site, tuple) else self.site
        return {"site": site, "reason": self.reason}


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...] = field(default=())

    @classmethod
    def of(cls, violations: Iterable[Violation]) -> VerificationReport:
        vs = tuple(violations)
        return cls(not vs, vs)

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


def check_domain(g: FiniteGraph, c: Coloring):
    """Raise unless ``c`` colors exactly the sites of ``g`` its kind requires."""
    if c.kind.has_vertices:
        for v in range(g.order):
            if v not in c.vertex:
                raise ColoringDomainError(f"schema mismatch: vertex {v} uncolored")
        extra = set(c.vertex) - set(range(g.order))
        if extra:
            raise ColoringDomainError(f"schema mismatch: vertex {min(extra)} is not in the graph")
    if c.kind.has_edges:
        edges = set(g.edges)
        for e in g.edges:
            if e not in c.edge:
                raise ColoringDomainError(f"schema mismatch: edge {list(e)} uncolored")
        extra = set(c.edge) - edges
        if extra:
            raise ColoringDomainError(f"schema mismatch: edge {list(min(extra))} is not in the graph")


def _proper_vertex(g: FiniteGraph, f: Mapping[int, int]) -> list[Violation]:
    return [Violation((u, v), f"endpoints share color {f[u]}") for u, v in g.edges if f[u] == f[v]]


def _proper_edge(g: FiniteGraph, h: Mapping[Edge, int]) -> list[Violation]:
    out = []
    for x in range(g.order):
        first: dict[int, Edge] = {}
        for y in g.adjacency[x]:
            e = edge_key(x, y)
            c = h[e]
            if c in first:
                out.append(Violation(e, f"shares color {c} with edge {list(first[c])} at vertex {x}"))
            else:
                first[c] = e
    return out


def _incidence(g: FiniteGraph, f: Mapping[int, int], h: Mapping[Edge, int]) -> list[Violation]:
    out = []
    for u, v in g.edges:
        c = h[(u, v)]
        if c in (f[u], f[v]):
            out.append(Violation((u, v), f"edge color {c} repeats an endpoint color"))
    return out


def neighbor_palette(g: FiniteGraph, f: Mapping[int, int], v: int) -> frozenset[int]:
    return frozenset(f[u] for u in g.adjacency[v])


def incident_palette(g: FiniteGraph, h: Mapping[Edge, int], v: int) -> frozenset[int]:
    return frozenset(h[edge_key(v, u)] for u in g.adjacency[v])


def has_odd_color(g: FiniteGraph, f: Mapping[int, int], v: int) -> bool:
    counts = Counter(f[u] for u in g.adjacency[v])
    return any(m % 2 for m in counts.values())


def verify_structural(g: FiniteGraph, c: Coloring, notion: Notion | str,
                      open_vertices: Iterable[int] = ()) -> VerificationReport:
    """Check one structural coloring notion.

    ``open_vertices`` are exempt from the odd condition (their neighborhoods are
    not complete, e.g. the outermost layer of a truncation).
    """
    notion = Notion(notion)
    if c.kind is not notion.kind:
        raise ColoringDomainError(f"notion {notion.value} needs a {notion.kind.value} coloring, got {c.kind.value}")
    check_domain(g, c)
    if notion is Notion.PROPER_VERTEX:
        return VerificationReport.of(_proper_vertex(g, c.vertex))
    if notion is Notion.PROPER_EDGE:
        return VerificationReport.of(_proper_edge(g, c.edge))
    if notion is Notion.TOTAL:
        return VerificationReport.of(_proper_vertex(g, c.vertex) + _proper_edge(g, c.edge)
                                     + _incidence(g, c.vertex, c.edge))
    if notion is Notion.ND_EDGE:
        bad = _proper_edge(g, c.edge)
        if not bad:
            bad = [Violation((u, v), "endpoints see the same incident edge colors")
                   for u, v in g.edges
                   if incident_palette(g, c.edge, u) == incident_palette(g, c.edge, v)]
        return VerificationReport.of(bad)
    bad = _proper_vertex(g, c.vertex)
    if bad:
        return VerificationReport.of(bad)
    if notion is Notion.ODD:
        skip = set(open_vertices)
        bad = [Violation(v, "no neighbor color appears an odd number of times")
               for v in range(g.order)
               if g.adjacency[v] and v not in skip and not has_odd_color(g, c.vertex, v)]
    elif notion is Notion.ND_VERTEX:
        bad = [Violation((u, v), "endpoints see the same neighbor colors")
               for u, v in g.edges
               if neighbor_palette(g, c.vertex, u) == neighbor_palette(g, c.vertex, v)]
    return VerificationReport.of(bad)


def verify_distinguishing(g: FiniteGraph, c: Coloring, auts: AutomorphismSet) -> VerificationReport:
    """Valid iff no non-identity member of ``auts`` preserves ``c``."""
    if auts.order != g.order:
        raise ColoringDomainError(f"automorphisms act on {auts.order} points, graph has order {g.order}")
    check_domain(g, c)
    ident = auts.identity
    bad = [Violation(f"aut[{i}]", f"preserved by non-identity automorphism {list(p)}")
           for i, p in enumerate(auts.members) if p != ident and preserves(p, c)]
    return VerificationReport.of(bad)


def verify_list_containment(c: Coloring, L: ListAssignment) -> VerificationReport:
    if c.kind is not Kind.VERTEX:
        raise ColoringDomainError("list containment applies to vertex colorings")
    if set(c.vertex) != set(L.lists):
        diff = set(c.vertex) ^ set(L.lists)
        raise ColoringDomainError(f"schema mismatch: vertex {min(diff)} is not in both the coloring and the lists")
    return VerificationReport.of(
        Violation(v, f"color {col} not in list {sorted(L[v])}")
        for v, col in sorted(c.vertex.items()) if col not in L[v])
