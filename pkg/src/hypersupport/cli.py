"""Command-line front end.

All results go to stdout as JSON; progress logs go to stderr as JSON lines
when --verbose is given.  Exit codes: 0 when a decision was reached (a
"none" answer is a decision), 2 when a search gave up on its budget, 1 on
any input problem.
"""

from __future__ import annotations

import argparse
import json
import sys

from .budget import SearchStats, Unknown, default_budget
from .dot import export_dot
from .errors import HypersupportError, InputError
from .glueing import EdgeBipartition, canonical_bipartition, compute_signature, middle_set
from .hypercore import Hypergraph, twin_partition
from .instances import (
    fig2_hypergraph,
    fig2_support,
    random_hypergraph,
    scaled_twin_family,
)
from .kernel import PsiThreshold, rule1_apply
from .planegeom import PlaneEmbedding, SimpleGraph, outerplanarity_number
from .supports import PLANAR_ONLY, find_r_outerplanar_support, is_support

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNKNOWN = 2


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _log(verbose: bool, **fields) -> None:
    if verbose:
        json.dump(fields, sys.stderr, sort_keys=True)
        sys.stderr.write("\n")


def _stats_dict(stats: SearchStats) -> dict:
    return stats.as_dict()


def _cmd_check_support(args) -> int:
    hypergraph = Hypergraph.from_json_dict(_load_json(args.hypergraph))
    graph = SimpleGraph.from_json_dict(_load_json(args.graph))
    _emit({"is_support": is_support(graph, hypergraph)})
    return EXIT_OK


def _cmd_kernelize(args) -> int:
    hypergraph = Hypergraph.from_json_dict(_load_json(args.hypergraph))
    if args.threshold_override is not None:
        threshold = PsiThreshold.override(args.threshold_override)
    else:
        threshold = PsiThreshold.exact()
    reduced, removals = rule1_apply(hypergraph, args.r, threshold)
    for removal in removals:
        json.dump(removal.to_json_dict(), sys.stderr, sort_keys=True)
        sys.stderr.write("\n")
    payload = {
        "hypergraph": reduced.to_json_dict(),
        "removals": [r.to_json_dict() for r in removals],
        "threshold_mode": threshold.mode,
    }
    if threshold.mode == "override":
        payload["warning"] = (
            "override threshold in effect; the exact size-threshold guarantee does not apply"
        )
    _emit(payload)
    return EXIT_OK


def _cmd_find_support(args) -> int:
    hypergraph = Hypergraph.from_json_dict(_load_json(args.hypergraph))
    r = PLANAR_ONLY if args.planar_only else args.r
    budget = args.budget if args.budget is not None else default_budget()
    _log(args.verbose, event="search-start", n=hypergraph.n, m=hypergraph.m, budget=budget)
    result = find_r_outerplanar_support(hypergraph, r, budget)
    _log(args.verbose, event="search-end", status=result.status, **_stats_dict(result.stats))
    if result.status == "found":
        assert result.certificate is not None
        _emit(
            {
                "result": "support",
                "certificate": result.certificate.to_json_dict(),
                "stats": _stats_dict(result.stats),
            }
        )
        return EXIT_OK
    if result.status == "none":
        _emit({"result": "none", "stats": _stats_dict(result.stats)})
        return EXIT_OK
    _emit({"result": "unknown", "stats": _stats_dict(result.stats)})
    return EXIT_UNKNOWN


def _cmd_outerplanarity(args) -> int:
    graph = SimpleGraph.from_json_dict(_load_json(args.graph))
    budget = args.budget if args.budget is not None else default_budget()
    value = outerplanarity_number(graph, budget)
    if isinstance(value, Unknown):
        _emit(
            {
                "result": "unknown",
                "best_bound": value.best_bound,
                "nodes_expanded": value.nodes_expanded,
            }
        )
        return EXIT_UNKNOWN
    _emit({"outerplanarity": value})
    return EXIT_OK


def _cmd_signature(args) -> int:
    hypergraph = Hypergraph.from_json_dict(_load_json(args.hypergraph))
    graph = SimpleGraph.from_json_dict(_load_json(args.graph))
    data = _load_json(args.bipartition)
    if "A" not in data or "B" not in data:
        raise InputError("bipartition JSON needs edge arrays 'A' and 'B'")

    def read_side(key: str) -> list[tuple[str, str]]:
        side = data[key]
        if not isinstance(side, list):
            raise InputError(f"'{key}' must be a list of edges")
        out = []
        for e in side:
            if not isinstance(e, list) or len(e) != 2:
                raise InputError(f"'{key}' entries must be vertex pairs")
            out.append((e[0], e[1]))
        return out

    a_side = read_side("A")
    b_side = read_side("B")
    middle_set(graph, a_side, b_side)  # validates the bipartition
    bipartition = canonical_bipartition(graph, a_side)
    twins = twin_partition(hypergraph)
    signature = compute_signature(hypergraph, graph, bipartition, twins)
    _emit(signature.to_json_dict())
    return EXIT_OK


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "fig2":
        _emit(fig2_hypergraph().to_json_dict())
    elif kind == "fig2-support":
        _, embedding = fig2_support()
        _emit(embedding.to_json_dict())
    elif kind == "appendixA":
        if args.ell is None:
            raise InputError("gen appendixA needs --ell")
        _emit(scaled_twin_family(args.ell).to_json_dict())
    elif kind == "random":
        if args.n is None or args.m is None or args.seed is None:
            raise InputError("gen random needs --n, --m and --seed")
        _emit(random_hypergraph(args.n, args.m, args.max_edge_size, args.seed).to_json_dict())
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown generator {kind!r}")
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    graph = SimpleGraph.from_json_dict(_load_json(args.graph))
    hypergraph = None
    if args.hypergraph is not None:
        hypergraph = Hypergraph.from_json_dict(_load_json(args.hypergraph))
    sys.stdout.write(export_dot(graph, hypergraph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersupport",
        description="Decide and construct r-outerplanar supports for hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-support", help="is the graph a support for the hypergraph?")
    p.add_argument("hypergraph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_check_support)

    p = sub.add_parser("kernelize", help="apply the twin-class size-threshold reduction")
    p.add_argument("hypergraph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--threshold-override", type=int, default=None)
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("find-support", help="search for an r-outerplanar or planar support")
    p.add_argument("hypergraph")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--r", type=int)
    mode.add_argument("--planar-only", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1, help="worker hint; results never depend on it")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_find_support)

    p = sub.add_parser("outerplanarity", help="minimum layer count over all embeddings")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_outerplanarity)

    p = sub.add_parser("signature", help="edge-bipartition signature of a support")
    p.add_argument("hypergraph")
    p.add_argument("graph")
    p.add_argument("bipartition")
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("gen", help="emit a built-in or random instance as JSON")
    p.add_argument("kind", choices=["fig2", "fig2-support", "appendixA", "random"])
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--max-edge-size", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("export-dot", help="render a graph (optionally with hyperedge colors) as DOT")
    p.add_argument("graph")
    p.add_argument("--hypergraph", default=None)
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; map those to input errors
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
            raise InputError("--jobs must be >= 1")
        return args.func(args)
    except HypersupportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entry() -> None:
    sys.exit(main())


__all__ = ["main", "build_parser", "entry"]
