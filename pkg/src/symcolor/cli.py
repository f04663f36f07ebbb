"""symcolor command line.

Every subcommand prints one JSON document (or DOT text) on stdout and keeps
diagnostics on stderr. Exit status: 0 success or valid, 1 invalid coloring,
refutation or algorithm refusal, 2 usage, input or resource error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import dot
from .autgroup import enumerate_automorphisms
from .colorings import (Coloring, ListAssignment, Notion, VerificationReport, verify_distinguishing,
                        verify_list_containment, verify_structural)
from .corpus import RULES, all_connected_graphs, bound_check_corpus
from .errors import (AlgorithmFailure, FiniteObstruction, GeneratorContractError, ParameterUndefined,
                     RefutationError, ResourceLimitError, SymcolorError, UnsupportedStructure)
from .gadgets import GadgetKind, GadgetSpec, blob_partition, generate, realize
from .graph import FiniteGraph, bfs_tree, truncate
from .solvers import Parameter, compute_parameter

REFUSALS = (RefutationError, FiniteObstruction, AlgorithmFailure, UnsupportedStructure, ParameterUndefined)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None


def load_graph(path: str) -> FiniteGraph:
    text = _read(path)
    if text.lstrip().startswith("{"):
        try:
            return FiniteGraph.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path} is not valid JSON: {exc.msg}") from None
    return dot.from_dot(text)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


# -- subcommands ------------------------------------------------------------------

def cmd_gen(args) -> int:
    spec = GadgetSpec(GadgetKind(args.gadget), args.blob, None if args.depth is not None else args.horizon)
    g = truncate(generate(spec), args.depth) if args.depth is not None else realize(spec)
    if args.dot:
        sys.stdout.write(dot.to_dot(g, args.gadget.upper()))
    else:
        doc = g.to_json()
        doc["max_degree"] = g.max_degree
        _emit(doc)
    return 0


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    result = compute_parameter(g, Parameter(args.param), budget=args.budget)
    _emit(result.to_json())
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    c = Coloring.from_json(_json(args.coloring))
    if args.notion is None and not args.distinguishing and args.lists is None:
        raise UsageError("nothing to verify: give --notion, --distinguishing or --lists")
    reports: list[VerificationReport] = []
    if args.notion is not None:
        reports.append(verify_structural(g, c, Notion(args.notion)))
    if args.distinguishing:
        reports.append(verify_distinguishing(g, c, enumerate_automorphisms(g)))
    if args.lists is not None:
        reports.append(verify_list_containment(c, ListAssignment.from_json(_json(args.lists))))
    merged = VerificationReport.of(v for r in reports for v in r.violations)
    _emit(merged.to_json())
    return 0 if merged.valid else 1


def _algo_kpw(args) -> int:
    from .constructive.kpw import kpw_construct

    r = kpw_construct(load_graph(args.graph))
    _emit({"coloring": r.coloring.to_json(), "strategy": r.strategy, "root": r.root})
    return 0


def _algo_listdist(args) -> int:
    from .constructive.listdist import list_distinguishing, rotated_lists

    g = load_graph(args.graph)
    k = 2 * g.max_degree - 1
    if args.lists is not None:
        L = ListAssignment.from_json(_json(args.lists))
    elif args.rotated:
        root = min(v for v in range(g.order) if g.degree(v) == g.max_degree)
        L = rotated_lists(list(bfs_tree(g, root).order), k)
    else:
        L = ListAssignment.uniform(g.order, range(k))
    try:
        c, trace = list_distinguishing(g, L)
    except AlgorithmFailure as exc:
        if exc.trace is not None:
            sys.stderr.write(exc.trace.to_jsonl())
        raise
    if args.trace_out:
        with open(args.trace_out, "w") as fh:
            fh.write(trace.to_jsonl())
    _emit({"coloring": c.to_json(), "trace": trace.to_json()})
    return 0


def _algo_recolor(args) -> int:
    from .constructive.recolor import blob_edge_bundles, color_elimination_recolor

    g = load_graph(args.graph)
    f = Coloring.from_json(_json(args.coloring))
    blobs = blob_partition(g)
    if not blobs:
        raise UsageError("graph has no blob vertices (labels a<i>_<j>)")
    if args.edges:
        blobs = blob_edge_bundles(g, blobs)
    removed = [int(x) for x in args.remove.split(",") if x.strip()]
    _emit({"coloring": color_elimination_recolor(g, f, removed, blobs).to_json()})
    return 0


def _algo_extend(args) -> int:
    from .constructive.compactness import compactness_extend

    gen = generate(GadgetSpec(GadgetKind(args.gadget), args.blob, args.horizon))
    c = compactness_extend(gen, args.palette, Notion(args.notion), args.depth, args.lookahead)
    _emit({"coloring": c.to_json(), "depth": args.depth, "lookahead": args.lookahead})
    return 0


def cmd_corpus(args) -> int:
    names = [r.strip() for r in args.rules.split(",") if r.strip()]
    unknown = [r for r in names if r not in RULES]
    if unknown:
        raise UsageError(f"unknown rule {unknown[0]}; choose from {', '.join(RULES)}")
    report = bound_check_corpus(all_connected_graphs(args.max_order), names,
                                distinguishing_max_order=args.distinguishing_max_order)
    _emit(report.to_json())
    return 1 if report.violations else 0


def cmd_export(args) -> int:
    g = load_graph(args.graph)
    if args.to == "dot":
        sys.stdout.write(dot.to_dot(g))
    else:
        _emit(g.to_json())
    return 0


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a gadget graph")
    gen.add_argument("--gadget", required=True, choices=[k.value for k in GadgetKind])
    gen.add_argument("--blob", type=int, default=2)
    gen.add_argument("--horizon", type=int, default=4, help="blobs (tail length for h)")
    gen.add_argument("--depth", type=int, help="truncate the infinite graph at this BFS depth instead")
    gen.add_argument("--dot", action="store_true")
    gen.set_defaults(func=cmd_gen)

    comp = sub.add_parser("compute", help="exact parameter value with witness")
    comp.add_argument("--graph", required=True)
    comp.add_argument("--param", required=True, choices=[q.value for q in Parameter])
    comp.add_argument("--budget", type=int, default=50_000_000)
    comp.set_defaults(func=cmd_compute)

    ver = sub.add_parser("verify", help="check a coloring")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--coloring", required=True)
    ver.add_argument("--notion", choices=[n.value for n in Notion])
    ver.add_argument("--distinguishing", action="store_true")
    ver.add_argument("--lists")
    ver.set_defaults(func=cmd_verify)

    algo = sub.add_parser("algo", help="run a constructive algorithm")
    asub = algo.add_subparsers(dest="algorithm", required=True)
    kpw = asub.add_parser("kpw", help="total distinguishing coloring, ceil(sqrt(Delta)) colors")
    kpw.add_argument("--graph", required=True)
    kpw.set_defaults(func=_algo_kpw)
    ld = asub.add_parser("listdist", help="proper distinguishing coloring from 2*Delta-1 lists")
    ld.add_argument("--graph", required=True)
    src = ld.add_mutually_exclusive_group()
    src.add_argument("--lists")
    src.add_argument("--rotated", action="store_true", help="rotated lists by BFS position")
    ld.add_argument("--trace-out", help="also write the repair trace as JSON lines")
    ld.set_defaults(func=_algo_listdist)
    rc = asub.add_parser("recolor", help="eliminate colors from gadget blobs")
    rc.add_argument("--graph", required=True)
    rc.add_argument("--coloring", required=True)
    rc.add_argument("--remove", required=True, help="comma-separated colors")
    rc.add_argument("--edges", action="store_true", help="blobs are the hub edges")
    rc.set_defaults(func=_algo_recolor)
    ext = asub.add_parser("extend", help="layered coloring with lookahead")
    ext.add_argument("--gadget", required=True, choices=[k.value for k in GadgetKind])
    ext.add_argument("--blob", type=int, default=2)
    ext.add_argument("--horizon", type=int)
    ext.add_argument("--palette", type=int, required=True)
    ext.add_argument("--notion", required=True, choices=["proper-vertex", "odd", "total"])
    ext.add_argument("--depth", type=int, required=True)
    ext.add_argument("--lookahead", type=int, default=0)
    ext.set_defaults(func=_algo_extend)

    cor = sub.add_parser("corpus", help="bound checks over all small connected graphs")
    cor.add_argument("--max-order", type=int, default=6)
    cor.add_argument("--rules", default="brooks,vizing,kpw,odd")
    cor.add_argument("--distinguishing-max-order", type=int)
    cor.set_defaults(func=cmd_corpus)

    exp = sub.add_parser("export", help="convert a graph between JSON and DOT")
    exp.add_argument("--graph", required=True)
    exp.add_argument("--to", choices=["dot", "json"], default="dot")
    exp.set_defaults(func=cmd_export)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except REFUSALS as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except (UsageError, ResourceLimitError, GeneratorContractError, SymcolorError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
