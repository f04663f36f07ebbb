"""Exact automorphism groups of small graphs, stored as explicit member lists."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ColoringDomainError, ResourceLimitError
from .graph import FiniteGraph, edge_key

Permutation = tuple[int, ...]

DEFAULT_MEMBER_BUDGET = 1_000_000


@dataclass(frozen=True)
class AutomorphismSet:
    order: int
    members: tuple[Permutation, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.members)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in set(self.members)

    @property
    def identity(self) -> Permutation:
        return tuple(range(self.order))

    def nontrivial(self) -> list[Permutation]:
        ident = self.identity
        return [p for p in self.members if p != ident]

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_group(self) -> bool:
        """Identity, inverses and closure, checked exhaustively."""
        members = set(self.members)
        if self.identity not in members:
            return False
        for p in members:
            if inverse(p) not in members:
                return False
            for q in members:
                if compose(p, q) not in members:
                    return False
        return True

    def to_json(self) -> dict:
        return {"order": self.order, "members": [list(p) for p in self.members]}

    @classmethod
    def from_json(cls, doc: dict) -> AutomorphismSet:
        return cls(int(doc["order"]), tuple(sorted(tuple(p) for p in doc["members"])))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply q first."""
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def refine_colors(g: FiniteGraph, initial: Sequence[int] | None = None) -> list[int]:
    """Iterated (color, multiset of neighbor colors) refinement to a fixed point.

    Class numbers are canonical (assigned by sorted signature), so the result is
    invariant under automorphisms: sigma(v) always lands in v's class.
    """
    colors = list(initial) if initial is not None else [g.degree(v) for v in range(g.order)]
    n_classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adjacency[v]))) for v in range(g.order)]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [index[s] for s in sigs]
        if len(index) == n_classes:
            return colors
        n_classes = len(index)


def _search_order(g: FiniteGraph) -> list[int]:
    seen = [False] * g.order
    order: list[int] = []
    for start in range(g.order):
        if seen[start]:
            continue
        seen[start] = True
        order.append(start)
        head = len(order) - 1
        while head < len(order):
            u = order[head]
            head += 1
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
    return order


def enumerate_automorphisms(g: FiniteGraph, budget: int = DEFAULT_MEMBER_BUDGET) -> AutomorphismSet:
    """All automorphisms, by backtracking over images inside refined color classes."""
    n = g.order
    colors = refine_colors(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    order = _search_order(g)
    adj = g._adjsets
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(depth: int):
        if depth == n:
            found.append(tuple(image))
            if len(found) > budget:
                raise ResourceLimitError(f"automorphism budget of {budget} members exceeded")
            return
        v = order[depth]
        mapped = order[:depth]
        for w in cells[colors[v]]:
            if used[w]:
                continue
            ok = True
            for u in mapped:
                if (u in adj[v]) != (image[u] in adj[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(depth + 1)
                used[w] = False
                image[v] = -1

    if n:
        extend(0)
    else:
        found.append(())
    return AutomorphismSet(n, tuple(sorted(found)))


def automorphisms_bruteforce(g: FiniteGraph) -> AutomorphismSet:
    """Filter all n! permutations; independent reference for small orders."""
    edges = set(g.edges)
    members = []
    for perm in itertools.permutations(range(g.order)):
        if all(edge_key(perm[u], perm[v]) in edges for u, v in edges):
            members.append(tuple(perm))
    return AutomorphismSet(g.order, tuple(sorted(members)))


def orbits(a: AutomorphismSet) -> list[frozenset[int]]:
    """Orbit partition, listed by least element."""
    seen: set[int] = set()
    out = []
    for v in range(a.order):
        if v in seen:
            continue
        orb = frozenset(p[v] for p in a.members)
        seen |= orb
        out.append(orb)
    return out


def fixed_vertices(a: AutomorphismSet) -> set[int]:
    return {v for v in range(a.order) if all(p[v] == v for p in a.members)}


def preserves(sigma: Sequence[int], c, kind=None) -> bool:
    """True iff ``sigma`` maps every colored element to one of the same color."""
    from .colorings import Kind

    kind = Kind(kind) if kind is not None else c.kind
    if kind in (Kind.VERTEX, Kind.TOTAL):
        if c.vertex is None or set(c.vertex) != set(range(len(sigma))):
            raise ColoringDomainError("vertex colors do not match the permutation's domain")
        vc = c.vertex
        if any(vc[sigma[v]] != vc[v] for v in vc):
            return False
    if kind in (Kind.EDGE, Kind.TOTAL):
        if c.edge is None:
            raise ColoringDomainError("coloring has no edge colors")
        ec = c.edge
        for (u, v), col in ec.items():
            img = edge_key(sigma[u], sigma[v])
            if img not in ec:
                raise ColoringDomainError(f"edge {list(img)} uncolored; sigma is not an automorphism of this domain")
            if ec[img] != col:
                return False
    return True
