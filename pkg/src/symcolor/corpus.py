"""Connected-graph corpora and bound checks over them.

Graphs of order n are enumerated as edge subsets of K_n, filtered for
connectivity, and reduced to isomorphism classes by a canonical bitmask
(minimum over all n! relabelings, vectorised with numpy).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .errors import ParameterUndefined, ResourceLimitError
from .graph import FiniteGraph, from_edge_list
from .solvers import Parameter, compute_parameter


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _connected_mask(n: int, pairs, mask: int) -> bool:
    adj = [0] * n
    for b, (u, v) in enumerate(pairs):
        if mask >> b & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def canonical_masks(n: int, masks: np.ndarray) -> np.ndarray:
    """Least bitmask over all vertex relabelings, for each input mask."""
    pairs = _pairs(n)
    bit = {p: i for i, p in enumerate(pairs)}
    masks = masks.astype(np.int64)
    bits = [(masks >> b) & 1 for b in range(len(pairs))]
    best = np.full(masks.shape, np.iinfo(np.int64).max, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        img = np.zeros_like(masks)
        for b, (u, v) in enumerate(pairs):
            pu, pv = perm[u], perm[v]
            img |= bits[b] << bit[(pu, pv) if pu < pv else (pv, pu)]
        np.minimum(best, img, out=best)
    return best


def connected_graphs(n: int) -> list[FiniteGraph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    if n <= 0:
        return []
    if n == 1:
        return [from_edge_list(1, [])]
    pairs = _pairs(n)
    conn = np.array([m for m in range(1 << len(pairs)) if _connected_mask(n, pairs, m)], dtype=np.int64)
    reps = np.unique(canonical_masks(n, conn))
    out = []
    for m in sorted(reps.tolist(), key=lambda m: (bin(m).count("1"), m)):
        out.append(from_edge_list(n, [p for b, p in enumerate(pairs) if m >> b & 1]))
    return out


def all_connected_graphs(max_order: int, min_order: int = 1) -> list[FiniteGraph]:
    return [g for n in range(min_order, max_order + 1) for g in connected_graphs(n)]


# -- graph predicates ------------------------------------------------------------

def is_complete(g: FiniteGraph) -> bool:
    return g.n_edges == g.order * (g.order - 1) // 2


def is_cycle(g: FiniteGraph) -> bool:
    return g.order >= 3 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.order))


def is_odd_cycle(g: FiniteGraph) -> bool:
    return is_cycle(g) and g.order % 2 == 1


def is_c5(g: FiniteGraph) -> bool:
    return is_cycle(g) and g.order == 5


def ceil_sqrt(x: int) -> int:
    return math.isqrt(x - 1) + 1 if x > 0 else 0


# -- bound rules -----------------------------------------------------------------

@dataclass(frozen=True)
class BoundRule:
    """``parameter(g) <= bound(Delta)`` wherever ``applies`` and no ``exception`` holds.

    ``applies`` and ``exception`` return a reason string when they fire, else None.
    """

    name: str
    parameter: Parameter
    bound: Callable[[int], int]
    formula: str
    excluded: Callable[[FiniteGraph], str | None] = lambda g: None
    exception: Callable[[FiniteGraph], str | None] = lambda g: None


def _brooks_exception(g):
    if is_complete(g):
        return "complete graph"
    if is_odd_cycle(g):
        return "odd cycle"
    return None


RULES = {
    "brooks": BoundRule("brooks", Parameter.CHI, lambda d: d, "Delta",
                        exception=_brooks_exception),
    "vizing": BoundRule("vizing", Parameter.CHI_PRIME, lambda d: d + 1, "Delta+1"),
    "kpw": BoundRule("kpw", Parameter.D_TOTAL, ceil_sqrt, "ceil(sqrt(Delta))",
                     excluded=lambda g: "order < 3" if g.order < 3 else None),
    "odd": BoundRule("odd", Parameter.CHI_ODD, lambda d: 2 * d, "2*Delta",
                     excluded=lambda g: "no non-isolated vertex" if g.order < 2 else None,
                     exception=lambda g: "C5" if is_c5(g) else None),
}


@dataclass(frozen=True)
class CorpusEntry:
    graph: FiniteGraph
    rule: str
    status: str  # ok | violation | exception | excluded | skipped | error
    value: int | None = None
    bound: int | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {"order": self.graph.order, "edges": [list(e) for e in self.graph.edges],
                "rule": self.rule, "status": self.status, "value": self.value,
                "bound": self.bound, "note": self.note}


@dataclass
class CorpusReport:
    entries: list[CorpusEntry] = field(default_factory=list)
    restrictions: list[str] = field(default_factory=list)

    def with_status(self, status: str) -> list[CorpusEntry]:
        return [e for e in self.entries if e.status == status]

    @property
    def violations(self) -> list[CorpusEntry]:
        return self.with_status("violation")

    @property
    def exceptions(self) -> list[CorpusEntry]:
        return self.with_status("exception")

    def to_json(self) -> dict:
        counts: dict[str, dict[str, int]] = {}
        for e in self.entries:
            counts.setdefault(e.rule, {}).setdefault(e.status, 0)
            counts[e.rule][e.status] += 1
        flagged = [e.to_json() for e in self.entries if e.status not in ("ok", "excluded", "skipped")]
        return {"graphs": len({(e.graph.order, e.graph.edges) for e in self.entries}),
                "counts": counts, "flagged": flagged, "restrictions": self.restrictions}


def bound_check_corpus(corpus: Iterable[FiniteGraph], rules: Iterable[str | BoundRule],
                       distinguishing_max_order: int | None = None,
                       budget: int = 20_000_000) -> CorpusReport:
    """Evaluate every rule on every graph; resource errors are recorded per graph."""
    rules = [RULES[r] if isinstance(r, str) else r for r in rules]
    report = CorpusReport()
    if distinguishing_max_order is not None:
        names = [r.name for r in rules if r.parameter.distinguishing]
        if names:
            report.restrictions.append(
                f"rules {', '.join(names)} evaluated only on graphs of order <= {distinguishing_max_order}")
    for g in corpus:
        delta = g.max_degree
        for rule in rules:
            why = rule.excluded(g)
            if why:
                report.entries.append(CorpusEntry(g, rule.name, "excluded", note=why))
                continue
            if (rule.parameter.distinguishing and distinguishing_max_order is not None
                    and g.order > distinguishing_max_order):
                report.entries.append(CorpusEntry(g, rule.name, "skipped", note="order restriction"))
                continue
            bound = rule.bound(delta)
            try:
                value = compute_parameter(g, rule.parameter, budget=budget).value
            except (ResourceLimitError, ParameterUndefined) as exc:
                report.entries.append(CorpusEntry(g, rule.name, "error", bound=bound, note=str(exc)))
                continue
            if value <= bound:
                status, note = "ok", ""
            elif (why := rule.exception(g)):
                status, note = "exception", why
            else:
                status, note = "violation", f"{rule.parameter.value} = {value} > {rule.formula} = {bound}"
            report.entries.append(CorpusEntry(g, rule.name, status, value, bound, note))
    return report
