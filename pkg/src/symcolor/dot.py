"""Plain undirected DOT with vertex labels, and a reader for that same subset."""
from __future__ import annotations

import re

from .errors import GraphError
from .graph import FiniteGraph, from_edge_list


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: FiniteGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        lines.append(f"  {v} [label={_quote(g.labels[v])}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*(\d+)\s*\[\s*label\s*=\s*"((?:[^"\\]|\\.)*)"\s*\]\s*;?\s*$')
_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")


def from_dot(text: str) -> FiniteGraph:
    body = text.strip()
    if not re.match(r"^(strict\s+)?graph\b[^{]*\{", body) or not body.endswith("}"):
        raise GraphError("not an undirected DOT graph")
    inner = body[body.index("{") + 1:-1]
    labels: dict[int, str] = {}
    edges = []
    for raw in inner.splitlines():
        line = raw.strip()
        if not line:
            continue
        if m := _NODE.match(line):
            labels[int(m.group(1))] = re.sub(r"\\(.)", r"\1", m.group(2))
        elif m := _EDGE.match(line):
            edges.append((int(m.group(1)), int(m.group(2))))
        else:
            raise GraphError(f"unsupported DOT statement: {line}")
    ids = set(labels) | {v for e in edges for v in e}
    order = max(ids) + 1 if ids else 0
    return from_edge_list(order, edges, [labels.get(i, str(i)) for i in range(order)])
