"""Exact values of the twelve coloring parameters on small finite graphs.

:func:`compute_parameter` is an iterative-deepening backtracking search;
:func:`oracle_parameter` is a deliberately naive second route used to certify it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import networkx as nx

from .autgroup import AutomorphismSet, automorphisms_bruteforce, enumerate_automorphisms
from .colorings import (Coloring, Kind, Notion, verify_distinguishing,
                        verify_structural)
from .errors import ParameterUndefined, PreconditionError, ResourceLimitError
from .graph import FiniteGraph, edge_key

DEFAULT_NODE_BUDGET = 50_000_000


class Parameter(enum.Enum):
    CHI = "chi"
    CHI_PRIME = "chi-prime"
    CHI_TOTAL = "chi-total"
    CHI_ODD = "chi-odd"
    D = "d"
    D_PRIME = "d-prime"
    D_TOTAL = "d-total"
    CHI_D = "chi-d"
    CHI_PRIME_D = "chi-prime-d"
    CHI_TOTAL_D = "chi-total-d"
    CHI_N = "chi-n"
    CHI_PRIME_N = "chi-prime-n"

    @property
    def kind(self) -> Kind:
        return _TABLE[self][0]

    @property
    def notion(self) -> Notion | None:
        return _TABLE[self][1]

    @property
    def distinguishing(self) -> bool:
        return _TABLE[self][2]


_TABLE = {
    Parameter.CHI: (Kind.VERTEX, Notion.PROPER_VERTEX, False),
    Parameter.CHI_PRIME: (Kind.EDGE, Notion.PROPER_EDGE, False),
    Parameter.CHI_TOTAL: (Kind.TOTAL, Notion.TOTAL, False),
    Parameter.CHI_ODD: (Kind.VERTEX, Notion.ODD, False),
    Parameter.D: (Kind.VERTEX, None, True),
    Parameter.D_PRIME: (Kind.EDGE, None, True),
    Parameter.D_TOTAL: (Kind.TOTAL, None, True),
    Parameter.CHI_D: (Kind.VERTEX, Notion.PROPER_VERTEX, True),
    Parameter.CHI_PRIME_D: (Kind.EDGE, Notion.PROPER_EDGE, True),
    Parameter.CHI_TOTAL_D: (Kind.TOTAL, Notion.TOTAL, True),
    Parameter.CHI_N: (Kind.VERTEX, Notion.ND_VERTEX, False),
    Parameter.CHI_PRIME_N: (Kind.EDGE, Notion.ND_EDGE, False),
}


@dataclass(frozen=True)
class ParameterResult:
    parameter: Parameter
    value: int
    witness: Coloring
    minimality: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "param": self.parameter.value,
            "value": self.value,
            "witness": self.witness.to_json(),
            "minimality": self.minimality,
        }


def check_witness(g: FiniteGraph, p: Parameter, c: Coloring, auts: AutomorphismSet | None = None) -> bool:
    """Does ``c`` satisfy every requirement of ``p``?"""
    if c.kind is not p.kind:
        return False
    if p.notion is not None and not verify_structural(g, c, p.notion).valid:
        return False
    if p.distinguishing:
        auts = auts if auts is not None else enumerate_automorphisms(g)
        if not verify_distinguishing(g, c, auts).valid:
            return False
    return True


# -- search --------------------------------------------------------------------

def _component_bfs(g: FiniteGraph) -> list[int]:
    seen = [False] * g.order
    order: list[int] = []
    for s in range(g.order):
        if seen[s]:
            continue
        seen[s] = True
        order.append(s)
        head = len(order) - 1
        while head < len(order):
            u = order[head]
            head += 1
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
    return order


def site_order(g: FiniteGraph, kind: Kind, vertex_order: list[int] | None = None) -> list:
    """Sites in BFS order: each vertex, then its edges back to earlier vertices."""
    order = vertex_order if vertex_order is not None else _component_bfs(g)
    pos = {v: i for i, v in enumerate(order)}
    sites: list = []
    for x in order:
        if kind.has_vertices:
            sites.append(x)
        if kind.has_edges:
            back = sorted((y for y in g.adjacency[x] if pos[y] < pos[x]), key=pos.__getitem__)
            sites.extend(edge_key(x, y) for y in back)
    return sites


class ColoringProblem:
    """A finite constraint problem over vertex and/or edge sites.

    Constraints are evaluated at the first moment all their sites are assigned,
    so the search never prunes a branch that could still succeed.
    """

    def __init__(self, g: FiniteGraph, kind: Kind, notion: Notion | None,
                 auts: AutomorphismSet | None = None, sites: list | None = None,
                 odd_exempt=(), site_domain: dict | None = None):
        self.g = g
        self.kind = kind
        self.notion = notion
        self.sites = sites if sites is not None else site_order(g, kind)
        idx = {s: i for i, s in enumerate(self.sites)}
        self.index = idx
        n = len(self.sites)
        self.conflicts: list[list[int]] = [[] for _ in range(n)]
        self.checks: list[list[tuple]] = [[] for _ in range(n)]
        self.domain = [site_domain.get(s) for s in self.sites] if site_domain else None

        def vsite(v):
            return idx[v]

        def esite(u, v):
            return idx[edge_key(u, v)]

        def differ(a, b):
            if a < b:
                a, b = b, a
            self.conflicts[a].append(b)

        if notion in (Notion.PROPER_VERTEX, Notion.ODD, Notion.ND_VERTEX, Notion.TOTAL):
            for u, v in g.edges:
                differ(vsite(u), vsite(v))
        if notion in (Notion.PROPER_EDGE, Notion.ND_EDGE, Notion.TOTAL):
            for x in range(g.order):
                inc = [esite(x, y) for y in g.adjacency[x]]
                for i in range(len(inc)):
                    for j in range(i):
                        differ(inc[i], inc[j])
        if notion is Notion.TOTAL:
            for u, v in g.edges:
                differ(esite(u, v), vsite(u))
                differ(esite(u, v), vsite(v))
        for row in self.conflicts:
            row.sort()

        exempt = set(odd_exempt)
        if notion is Notion.ODD:
            for v in range(g.order):
                if g.adjacency[v] and v not in exempt:
                    scope = [vsite(u) for u in g.adjacency[v]]
                    self.checks[max(scope)].append(("odd", scope))
        elif notion is Notion.ND_VERTEX:
            for u, v in g.edges:
                a = [vsite(w) for w in g.adjacency[u]]
                b = [vsite(w) for w in g.adjacency[v]]
                self.checks[max(a + b)].append(("diff", a, b))
        elif notion is Notion.ND_EDGE:
            for u, v in g.edges:
                a = [esite(u, w) for w in g.adjacency[u]]
                b = [esite(v, w) for w in g.adjacency[v]]
                self.checks[max(a + b)].append(("diff", a, b))

        self.blocked = False
        if auts is not None:
            for perm in auts.nontrivial():
                sp = [idx[_image(perm, s)] for s in self.sites]
                moved = [i for i in range(n) if sp[i] != i]
                if not moved:
                    # sigma fixes every site: no coloring of these sites can break it
                    self.blocked = True
                    continue
                self.checks[max(max(moved), max(sp[i] for i in moved))].append(("aut", moved, sp))

    def solve(self, k: int, budget: int = DEFAULT_NODE_BUDGET, start_nodes: int = 0):
        """First valid assignment in (site, color) lexicographic order.

        Returns ``(colors or None, nodes)``. Colors are restricted to first-use
        order (a new color is at most one more than any used so far); every valid
        coloring has such a renaming and the lexicographically first one always
        does, so this changes neither feasibility nor the witness. Per-site
        domains break the color symmetry, so the restriction is off when set.
        """
        n = len(self.sites)
        col = [-1] * n
        conflicts, checks, domain = self.conflicts, self.checks, self.domain
        nodes = start_nodes
        if self.blocked:
            return None, nodes

        def rec(i, top):
            nonlocal nodes
            if i == n:
                return True
            allowed = domain[i] if domain is not None else None
            limit = k if domain is not None else min(k, top + 2)
            for c in range(limit):
                if allowed is not None and c not in allowed:
                    continue
                nodes += 1
                if nodes > budget:
                    raise ResourceLimitError(f"node budget {budget} exhausted")
                clash = False
                for j in conflicts[i]:
                    if col[j] == c:
                        clash = True
                        break
                if clash:
                    continue
                col[i] = c
                if _checks_pass(checks[i], col) and rec(i + 1, max(top, c)):
                    return True
            col[i] = -1
            return False

        if rec(0, -1):
            return list(col), nodes
        return None, nodes

    def to_coloring(self, colors: list[int]) -> Coloring:
        vertex = {s: c for s, c in zip(self.sites, colors) if not isinstance(s, tuple)}
        edge = {s: c for s, c in zip(self.sites, colors) if isinstance(s, tuple)}
        return Coloring(self.kind, vertex if self.kind.has_vertices else None,
                        edge if self.kind.has_edges else None)


def _image(perm, site):
    if isinstance(site, tuple):
        return edge_key(perm[site[0]], perm[site[1]])
    return perm[site]


def _checks_pass(checks: list[tuple], col: list[int]) -> bool:
    for ch in checks:
        tag = ch[0]
        if tag == "odd":
            counts: dict[int, int] = {}
            for j in ch[1]:
                counts[col[j]] = counts.get(col[j], 0) + 1
            if not any(m & 1 for m in counts.values()):
                return False
        elif tag == "diff":
            if {col[j] for j in ch[1]} == {col[j] for j in ch[2]}:
                return False
        elif tag == "aut":
            sp = ch[2]
            for i in ch[1]:
                if col[i] != col[sp[i]]:
                    break
            else:
                return False
    return True


def _minimality(value: int, refuted_nodes: int | None) -> dict:
    if refuted_nodes is None:
        return {"kind": "trivial", "lower_bound": value}
    return {"kind": "refuted", "k": value - 1, "nodes": refuted_nodes}


def compute_parameter(g: FiniteGraph, p: Parameter | str, budget: int = DEFAULT_NODE_BUDGET,
                      auts: AutomorphismSet | None = None) -> ParameterResult:
    p = Parameter(p)
    if p.distinguishing:
        if not g.is_connected():
            raise PreconditionError(f"{p.value} needs a connected graph")
        auts = auts if auts is not None else enumerate_automorphisms(g)
    problem = ColoringProblem(g, p.kind, p.notion, auts if p.distinguishing else None)
    n_sites = len(problem.sites)
    if n_sites == 0:
        colors, _ = problem.solve(0)
        if colors is None:
            raise ParameterUndefined(f"{p.value} does not exist for this graph")
        return ParameterResult(p, 0, problem.to_coloring([]), _minimality(0, None))
    total = 0
    last_nodes = None
    for k in range(1, n_sites + 1):
        try:
            colors, nodes = problem.solve(k, budget, total)
        except ResourceLimitError as exc:
            raise ResourceLimitError(str(exc), last_refuted=k - 1 if k > 1 else None) from None
        if colors is not None:
            return ParameterResult(p, k, problem.to_coloring(colors), _minimality(k, last_nodes))
        last_nodes = nodes - total
        total = nodes
    raise ParameterUndefined(f"{p.value} does not exist for this graph: even {n_sites} colors fail")


def replay_certificate(g: FiniteGraph, result: ParameterResult) -> bool:
    """Re-run the refutation recorded in ``result.minimality``."""
    p = result.parameter
    cert = result.minimality
    if cert["kind"] == "trivial":
        return result.value <= 1
    auts = enumerate_automorphisms(g) if p.distinguishing else None
    problem = ColoringProblem(g, p.kind, p.notion, auts)
    colors, nodes = problem.solve(cert["k"])
    return colors is None and nodes == cert["nodes"] and cert["k"] == result.value - 1


# -- oracle --------------------------------------------------------------------

def _conflict_graph(g: FiniteGraph, kind: Kind, notion: Notion | None) -> nx.Graph:
    base = nx.Graph()
    base.add_nodes_from(range(g.order))
    base.add_edges_from(g.edges)
    cg = nx.Graph()
    if kind.has_vertices:
        cg.add_nodes_from(range(g.order))
    if kind.has_edges:
        cg.add_nodes_from(g.edges)
    if notion in (Notion.PROPER_VERTEX, Notion.ODD, Notion.ND_VERTEX, Notion.TOTAL):
        cg.add_edges_from(g.edges)
    if notion in (Notion.PROPER_EDGE, Notion.ND_EDGE, Notion.TOTAL):
        lg = nx.line_graph(base)
        cg.add_edges_from((edge_key(*a), edge_key(*b)) for a, b in lg.edges)
    if notion is Notion.TOTAL:
        for u, v in g.edges:
            cg.add_edge((u, v), u)
            cg.add_edge((u, v), v)
    return cg


def oracle_parameter(g: FiniteGraph, p: Parameter | str, max_order: int = 7) -> ParameterResult:
    """Enumerate every coloring of the conflict graph for k = 1, 2, ...

    Only plain conflict-graph properness prunes; odd, neighbor-distinguishing and
    symmetry conditions are judged on complete colorings by the verifiers, with
    the automorphism group found by brute force over all permutations.
    """
    p = Parameter(p)
    if g.order > max_order:
        raise PreconditionError(f"oracle limited to order {max_order}, got {g.order}")
    cg = _conflict_graph(g, p.kind, p.notion)
    sites: list = (list(range(g.order)) if p.kind.has_vertices else []) + \
        (list(g.edges) if p.kind.has_edges else [])
    earlier = [[sites.index(t) for t in cg.adj[s] if sites.index(t) < i] for i, s in enumerate(sites)]
    auts = automorphisms_bruteforce(g) if p.distinguishing else None

    def build(colors) -> Coloring:
        vertex = {s: c for s, c in zip(sites, colors) if not isinstance(s, tuple)}
        edge = {s: c for s, c in zip(sites, colors) if isinstance(s, tuple)}
        return Coloring(p.kind, vertex if p.kind.has_vertices else None,
                        edge if p.kind.has_edges else None)

    def accept(c: Coloring) -> bool:
        if p.notion is not None and not verify_structural(g, c, p.notion).valid:
            return False
        return not p.distinguishing or verify_distinguishing(g, c, auts).valid

    def first(k):
        col = [0] * len(sites)

        def rec(i):
            if i == len(sites):
                c = build(col)
                return c if accept(c) else None
            for color in range(k):
                if all(col[j] != color for j in earlier[i]):
                    col[i] = color
                    hit = rec(i + 1)
                    if hit is not None:
                        return hit
            return None

        return rec(0)

    if not sites:
        c = build([])
        if accept(c):
            return ParameterResult(p, 0, c, {"kind": "trivial", "lower_bound": 0})
        raise ParameterUndefined(f"{p.value} does not exist for this graph")
    for k in range(1, len(sites) + 1):
        hit = first(k)
        if hit is not None:
            return ParameterResult(p, k, hit, {"kind": "exhaustive", "k": k - 1})
    raise ParameterUndefined(f"{p.value} does not exist for this graph: even {len(sites)} colors fail")
