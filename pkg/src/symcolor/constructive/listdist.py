"""Proper distinguishing colorings from lists of size 2*Delta - 1.

Phase 1 colors greedily in BFS order from a maximum-degree root v. Each x takes
the least color of

    A_x = L(x) - ({c_v} + colors of earlier siblings + colors of earlier neighbors)

or c_v itself when A_x is empty. Phase 2 repeatedly repairs the BFS-least
non-root vertex with property (*): colored c_v, degree Delta, and neighbor
colors exactly those of v's neighbors. Once v is the only such vertex it is
fixed by every color-preserving automorphism, and BFS induction fixes the rest.

Orders: BFS visit order for "earlier", ascending id for "least vertex",
ascending value for "least color".
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from ..autgroup import enumerate_automorphisms
from ..colorings import (Coloring, Kind, ListAssignment, Notion, verify_distinguishing,
                         verify_list_containment, verify_structural)
from ..errors import AlgorithmFailure, PreconditionError, UnsupportedStructure
from ..graph import FiniteGraph, bfs_tree


class Case(enum.Enum):
    CASE1 = "CASE1"
    CASE2 = "CASE2"
    CASE3_1A = "CASE3_1A"
    CASE3_1B = "CASE3_1B"
    CASE3_2 = "CASE3_2"


@dataclass(frozen=True)
class RepairRecord:
    vertex: int
    case: Case
    changes: tuple[tuple[int, int, int], ...]  # (vertex, old color, new color)
    conditions: dict[str, bool]

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "case": self.case.value,
                "changes": [list(c) for c in self.changes], "conditions": self.conditions}


@dataclass
class RepairTrace:
    root: int
    records: list[RepairRecord] = field(default_factory=list)
    fallbacks: list[int] = field(default_factory=list)

    def cases(self) -> list[Case]:
        return [r.case for r in self.records]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_json()) + "\n" for r in self.records)

    def to_json(self) -> dict:
        return {"root": self.root, "fallbacks": self.fallbacks,
                "repairs": [r.to_json() for r in self.records]}


def rotated_lists(order_of: list[int], k: int) -> ListAssignment:
    """Vertex at BFS position i gets {(i + j) mod 2k : j < k}."""
    return ListAssignment({v: {(i + j) % (2 * k) for j in range(k)} for i, v in enumerate(order_of)}, k)


class _State:
    def __init__(self, g: FiniteGraph, L: ListAssignment):
        self.g = g
        self.L = L
        self.delta = g.max_degree
        self.v = min(u for u in range(g.order) if g.degree(u) == self.delta)
        self.tree = bfs_tree(g, self.v)
        self.pos = self.tree.position()
        self.kids = self.tree.children()
        self.f: dict[int, int] = {}
        self.trace = RepairTrace(self.v)

    def siblings(self, x: int) -> list[int]:
        if x == self.v:
            return []
        return [w for w in self.kids[self.tree.parent[x]] if w != x]

    def conditions(self, x: int) -> dict[str, bool]:
        """(a)-(e) for x under the current coloring."""
        g, f, L, d = self.g, self.f, self.L, self.delta
        S, N = set(self.siblings(x)), set(g.adjacency[x])
        px = self.pos[x]
        return {
            "a": self.c_v in L[x],
            "b": all(self.pos[y] < px for y in S | N),
            "c": len(S) == d - 2 and len(N) == d,
            "d": not (S & N),
            "e": all(y in f and f[y] in L[x] for y in S | N),
        }

    # -- phase 1 ----------------------------------------------------------------

    def greedy(self):
        g, L, f = self.g, self.L, self.f
        self.c_v = min(L[self.v])
        f[self.v] = self.c_v
        for x in self.tree.order[1:]:
            px = self.pos[x]
            used = {self.c_v}
            used |= {f[w] for w in self.siblings(x) if self.pos[w] < px}
            used |= {f[w] for w in g.adjacency[x] if self.pos[w] < px}
            avail = L[x] - used
            if avail:
                f[x] = min(avail)
                continue
            cond = self.conditions(x)
            if not all(cond.values()):
                raise AlgorithmFailure(f"A_x empty at vertex {x} but conditions {cond} do not all hold",
                                       trace=self.trace)
            f[x] = self.c_v
            self.trace.fallbacks.append(x)
        self.root_palette = sorted(f[u] for u in g.adjacency[self.v])

    # -- phase 2 ----------------------------------------------------------------

    def has_star(self, x: int) -> bool:
        g, f = self.g, self.f
        return (f[x] == self.c_v and g.degree(x) == self.delta
                and sorted(f[u] for u in g.adjacency[x]) == self.root_palette)

    def first_star(self) -> int | None:
        for x in self.tree.order[1:]:
            if self.has_star(x):
                return x
        return None

    def blocked_by_cv(self, z: int) -> bool:
        """Does z have a sibling or parent colored c_v?"""
        f = self.f
        if z == self.v:
            return True
        return f[self.tree.parent[z]] == self.c_v or any(f[w] == self.c_v for w in self.siblings(z))

    def repair(self, x: int) -> RepairRecord:
        g, f, L = self.g, self.f, self.L
        cond = self.conditions(x)
        S = self.siblings(x)
        nx_ = set(g.adjacency[x])
        changes: list[tuple[int, int, int]] = []

        def setc(u, c):
            changes.append((u, f[u], c))
            f[u] = c

        def free_color(z):
            taken = {f[z]} | {f[w] for w in g.adjacency[z]} | {f[w] for w in self.siblings(z)}
            free = L[z] - taken
            return min(free) if free else None

        odd_degree = sorted(w for w in S if g.degree(w) != g.degree(x))
        if odd_degree:
            case = Case.CASE1
            setc(x, f[odd_degree[0]])
        elif other := sorted(w for w in S if set(g.adjacency[w]) != nx_):
            case = Case.CASE2
            setc(x, f[other[0]])
        elif open_z := sorted(z for z in nx_ if not self.blocked_by_cv(z)):
            z = open_z[0]
            if self.c_v not in L[z]:
                case = Case.CASE3_1A
                c = free_color(z)
                if c is None:
                    raise AlgorithmFailure(f"Case A: no free color for {z}", trace=self.trace)
                old = f[z]
                setc(z, c)
                setc(x, old)
            else:
                case = Case.CASE3_1B
                old = f[z]
                setc(x, old)
                setc(z, self.c_v)
        else:
            cands = sorted(z for z in nx_ if z != self.v and self.tree.parent[z] != self.v)
            if not cands:
                raise UnsupportedStructure(
                    f"every neighbor of {x} is a child of the root; the graph is complete bipartite-like")
            z = cands[0]
            case = Case.CASE3_2
            c = free_color(z)
            if c is None:
                raise AlgorithmFailure(f"Subcase 3.2: L'({z}) is empty", trace=self.trace)
            old = f[z]
            setc(x, old)
            setc(z, c)
        return RepairRecord(x, case, tuple(changes), cond)

    def is_proper(self) -> bool:
        return all(self.f[u] != self.f[w] for u, w in self.g.edges)


def list_distinguishing(g: FiniteGraph, L: ListAssignment) -> tuple[Coloring, RepairTrace]:
    """Proper, list-respecting, distinguishing vertex coloring; returns the repair trace too."""
    if not g.is_connected():
        raise PreconditionError("needs a connected graph")
    delta = g.max_degree
    if delta < 3:
        raise PreconditionError(f"needs maximum degree at least 3, got {delta}")
    if L.k != 2 * delta - 1:
        raise PreconditionError(f"list size must be 2*Delta-1 = {2 * delta - 1}, got {L.k}")
    if set(L.lists) != set(range(g.order)):
        raise PreconditionError("lists must cover exactly the vertices of the graph")
    st = _State(g, L)
    st.greedy()
    if not st.is_proper():
        raise AlgorithmFailure("phase 1 produced an improper coloring", trace=st.trace)
    while (x := st.first_star()) is not None:
        if len(st.trace.records) >= g.order:
            raise AlgorithmFailure(f"repair budget of {g.order} exceeded", trace=st.trace)
        rec = st.repair(x)
        st.trace.records.append(rec)
        if not st.is_proper():
            raise AlgorithmFailure(f"{rec.case.value} at vertex {x} broke properness", trace=st.trace)
        if st.has_star(x):
            raise AlgorithmFailure(f"{rec.case.value} left property (*) at vertex {x}", trace=st.trace)
    c = Coloring(Kind.VERTEX, dict(sorted(st.f.items())))
    auts = enumerate_automorphisms(g)
    checks = (verify_structural(g, c, Notion.PROPER_VERTEX), verify_list_containment(c, L),
              verify_distinguishing(g, c, auts))
    for name, rep in zip(("proper", "list containment", "distinguishing"), checks):
        if not rep.valid:
            raise AlgorithmFailure(f"final coloring fails {name}: {rep.violations[0].reason}", trace=st.trace)
    return c, st.trace
