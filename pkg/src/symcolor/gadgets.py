"""Generators for the spine-and-blob gadget graphs and the rigid list-coloring graph H.

Blob ``A_i`` is realised as ``n`` labelled vertices ``a{i}_1 .. a{i}_n``. A finite
``horizon`` (number of blobs, or tail length for H) closes the graph; ``None``
yields the infinite generator, which callers truncate at an explicit depth.

Finite closures:

* ``g``  spine t'', t', t0..t_{h-1}; blob A_i pendant on t_i.
* ``g1`` / ``h1``  spine t0..t_h with blobs A_0..A_{h-1}, i.e. exactly the
  depth-h truncation of the infinite graph. The spare spine vertex keeps the two
  ends from being swapped by a reflection.
* ``g2`` rail r0..r_h (one rail vertex past the last rung, for the same reason),
  rungs r_i - t_i and blobs on t_i for i < h.
* ``h``  the fixed core v0..v5, s0..s3 plus the tail s4..s_{3+h}.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass

from .colorings import ListAssignment
from .errors import GraphError
from .graph import FiniteGraph, GeneratorGraph, Layer


class GadgetKind(enum.Enum):
    G_FIG1 = "g"
    G1_FIG3 = "g1"
    H1_FIG4 = "h1"
    G2_FIG5 = "g2"
    H_FIG6 = "h"


@dataclass(frozen=True)
class GadgetSpec:
    kind: GadgetKind
    n: int = 2
    horizon: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", GadgetKind(self.kind))
        if self.kind is not GadgetKind.H_FIG6 and self.n < 2:
            raise ValueError(f"blob size must be at least 2, got {self.n}")
        if self.horizon is not None and self.horizon < 1:
            raise ValueError(f"horizon must be at least 1, got {self.horizon}")


def blob_labels(i: int, n: int) -> list[str]:
    return [f"a{i}_{j}" for j in range(1, n + 1)]


def _blob(i: int, n: int, hub: str, clique: bool) -> tuple[list[str], list[tuple[str, str]]]:
    names = blob_labels(i, n)
    edges = [(hub, x) for x in names]
    if clique:
        edges += list(itertools.combinations(names, 2))
    return names, edges


def _within(i: int, limit: int | None) -> bool:
    return i >= 0 and (limit is None or i < limit)


def _gadget_g(n: int, h: int | None) -> GeneratorGraph:
    def layer(k: int) -> Layer:
        if k == 1:
            return ["t'"], [("t''", "t'")]
        if k == 2:
            return ["t0"], [("t'", "t0")]
        names: list[str] = []
        edges: list[tuple[str, str]] = []
        if _within(k - 3, h):
            names, edges = _blob(k - 3, n, f"t{k - 3}", clique=False)
        if _within(k - 2, h):
            names.append(f"t{k - 2}")
            edges.append((f"t{k - 3}", f"t{k - 2}"))
        return names, edges

    return GeneratorGraph("t''", layer, n + 2, None if h is None else h + 2, "g")


def _gadget_g1(n: int, h: int | None, clique: bool, name: str) -> GeneratorGraph:
    def layer(k: int) -> Layer:
        names, edges = _blob(k - 1, n, f"t{k - 1}", clique) if _within(k - 1, h) else ([], [])
        names.append(f"t{k}")
        edges.append((f"t{k - 1}", f"t{k}"))
        return names, edges

    return GeneratorGraph("t0", layer, n + 2, h, name)


def _gadget_g2(n: int, h: int | None) -> GeneratorGraph:
    def layer(k: int) -> Layer:
        names: list[str] = []
        edges: list[tuple[str, str]] = []
        if _within(k - 2, h):
            names, edges = _blob(k - 2, n, f"t{k - 2}", clique=False)
        if _within(k - 1, h):
            names.append(f"t{k - 1}")
            edges.append((f"r{k - 1}", f"t{k - 1}"))
        if h is None or k <= h:
            names.append(f"r{k}")
            edges.append((f"r{k - 1}", f"r{k}"))
        return names, edges

    return GeneratorGraph("r0", layer, max(3, n + 1), None if h is None else h + 1, "g2")


_H_LAYERS: dict[int, Layer] = {
    1: (["v1", "v2", "v3", "v4"], [("v0", "v1"), ("v0", "v2"), ("v0", "v3"), ("v0", "v4")]),
    2: (["v5", "s1", "s2", "s4"],
        [("v1", "v5"), ("v2", "v5"), ("v3", "v5"), ("v4", "v5"),
         ("v2", "s1"), ("v4", "s2"), ("v1", "s4")]),
    3: (["s0", "s3", "s5"], [("v5", "s0"), ("s2", "s3"), ("s4", "s5")]),
}


def _gadget_h(tail: int | None) -> GeneratorGraph:
    # tail vertex s_i (i >= 4) sits at layer i - 2
    def layer(k: int) -> Layer:
        if k in _H_LAYERS:
            names, edges = _H_LAYERS[k]
            if k == 3 and tail is not None and tail < 2:
                return names[:2], edges[:2]
            if k == 2 and tail is not None and tail < 1:
                return names[:3], edges[:6]
            return list(names), list(edges)
        i = k + 2
        if tail is not None and i > 3 + tail:
            return [], []
        return [f"s{i}"], [(f"s{i - 1}", f"s{i}")]

    horizon = None if tail is None else max(3, tail + 1)
    return GeneratorGraph("v0", layer, 5, horizon, "h")


def generate(spec: GadgetSpec) -> GeneratorGraph:
    k, n, h = spec.kind, spec.n, spec.horizon
    if k is GadgetKind.G_FIG1:
        return _gadget_g(n, h)
    if k is GadgetKind.G1_FIG3:
        return _gadget_g1(n, h, True, "g1")
    if k is GadgetKind.H1_FIG4:
        return _gadget_g1(n, h, False, "h1")
    if k is GadgetKind.G2_FIG5:
        return _gadget_g2(n, h)
    return _gadget_h(h)


def realize(spec: GadgetSpec) -> FiniteGraph:
    """The whole finite gadget; needs a horizon."""
    from .graph import truncate

    if spec.horizon is None:
        raise ValueError("realize needs a finite horizon; use truncate for a depth cut")
    g = generate(spec)
    return truncate(g, g.horizon)


# -- structure read back from labels ------------------------------------------------

_BLOB = re.compile(r"^a(\d+)_(\d+)$")


def blob_partition(g: FiniteGraph) -> list[list[int]]:
    """Blob vertex ids grouped by blob index, ascending."""
    blobs: dict[int, list[int]] = {}
    for v, lab in enumerate(g.labels):
        if m := _BLOB.match(lab):
            blobs.setdefault(int(m.group(1)), []).append(v)
    return [blobs[i] for i in sorted(blobs)]


def spine(g: FiniteGraph) -> list[int]:
    """Every vertex that is not in a blob."""
    return [v for v, lab in enumerate(g.labels) if not _BLOB.match(lab)]


# -- the list assignment on H ---------------------------------------------------------

CORE_LISTS = {
    "v0": {1, 2}, "v1": {1, 3}, "v2": {2, 3},
    "v3": {1, 4}, "v4": {2, 4}, "v5": {3, 4},
}
TAIL_LIST = {5, 6}
CORE = ("v0", "v1", "v2", "v3", "v4", "v5")


def core_obstruction_lists(h: FiniteGraph) -> ListAssignment:
    """Two-element lists on H admitting no proper coloring of the core v0..v5."""
    idx = h.label_index()
    if not all(v in idx for v in CORE) or any(
            not (lab in CORE_LISTS or re.fullmatch(r"s\d+", lab)) for lab in h.labels):
        raise GraphError("list assignment is defined only on truncations of H")
    return ListAssignment({v: CORE_LISTS.get(lab, TAIL_LIST) for v, lab in enumerate(h.labels)}, 2)


def core_list_colorings(h: FiniteGraph, lists: ListAssignment) -> list[dict[int, int]]:
    """Every proper coloring of the core v0..v5 drawn from ``lists`` (exhaustive)."""
    idx = h.label_index()
    core = [idx[v] for v in CORE]
    found = []
    for choice in itertools.product(*(sorted(lists[v]) for v in core)):
        f = dict(zip(core, choice))
        if all(f[u] != f[w] for u in core for w in h.adjacency[u] if w in f):
            found.append(f)
    return found
