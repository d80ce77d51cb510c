"""``leafcon`` command line.

Exit codes: 0 pass or decided, 1 property refuted, 2 budget exhausted or
inconclusive, 64 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Sequence

from . import graph6
from .closure import l_closure, nk_closure
from .conditions import INCONCLUSIVE, NEGATIVE, evaluate
from .decider import DEFAULT_BUDGET, ORACLE_MAX_ORDER, Decision, is_k_leaf_connected, oracle_is_k_leaf_connected
from .errors import LeafconError, ParameterError
from .families import build_family, family_id
from .scan import ScanConfig, run_scan
from .spectral import DEFAULT_TOL, spectral_report
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _decision_code(decision: Decision) -> int:
    return {Decision.YES: EXIT_OK, Decision.NO: EXIT_REFUTED}.get(decision, EXIT_INCONCLUSIVE)


def cmd_decide(args: argparse.Namespace) -> int:
    g = graph6.decode(args.g6)
    if args.oracle:
        if g.n > ORACLE_MAX_ORDER:
            raise ParameterError(f"the enumeration oracle is limited to n <= {ORACLE_MAX_ORDER}")
        holds = oracle_is_k_leaf_connected(g, args.k)
        _emit({"n": g.n, "k": args.k, "method": "oracle", "decision": "yes" if holds else "no"})
        return EXIT_OK if holds else EXIT_REFUTED
    verdict = is_k_leaf_connected(g, args.k, args.budget)
    failing = verdict.failing_verdict
    _emit({
        "n": g.n,
        "k": args.k,
        "method": "decider",
        "decision": verdict.decision.value,
        "failing_set": sorted(verdict.failing_set) if verdict.failing_set is not None else None,
        "refutation": failing.refutation.value if failing and failing.refutation else None,
        "quick_reject": verdict.quick_reject,
        "connectivity": verdict.connectivity,
        "fast_sets": verdict.fast_sets,
        "searched_sets": verdict.searched_sets,
        "exhausted_sets": verdict.exhausted_sets,
        "search_nodes": verdict.nodes,
    })
    return _decision_code(verdict.decision)


def cmd_closure(args: argparse.Namespace) -> int:
    g = graph6.decode(args.g6)
    result = nk_closure(g, args.k) if args.k is not None else l_closure(g, args.l)
    _emit({
        "l": result.l,
        "input": graph6.encode(g),
        "closure": graph6.encode(result.closed_graph),
        "added_edges": [list(e) for e in result.added_edges],
    })
    return EXIT_OK


def cmd_conditions(args: argparse.Namespace) -> int:
    g = graph6.decode(args.g6)
    report = evaluate(g, args.k, decide=args.decide, budget=args.budget)
    _emit(report.to_dict())
    if report.conclusion == NEGATIVE:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE if report.conclusion == INCONCLUSIVE else EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    print(graph6.encode(build_family(family_id(args.id, args.n, args.k, args.t))))
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = graph6.decode(args.g6)
    _emit(asdict(spectral_report(g, args.tol)))
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    config = ScanConfig(n=args.n, k=args.k, sample_count=args.count, seed=args.seed, edge_min=args.edge_min,
                        budget=args.budget, parallelism=args.parallelism, edges_free=args.edges_free,
                        timing=args.timing)
    report = run_scan(config)
    text = report.to_json()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(json.dumps(report.summary, sort_keys=True))
    else:
        sys.stdout.write(text)
    if report.summary["anomalies"]:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE if report.summary["budget_exhausted"] else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        result = run_suite(name)
        print(result.line())
        for line in result.details:
            print(f"    {line}")
        ok &= result.passed
    return EXIT_OK if ok else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leafcon", description="Exact and sufficient-condition tests for k-leaf-connectivity.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="exact k-leaf-connectivity decision")
    p.add_argument("--g6", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--oracle", action="store_true", help="use spanning-tree enumeration (n <= 9)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("closure", help="degree-sum closure")
    p.add_argument("--g6", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--l", type=int)
    group.add_argument("--k", type=int, help="use l = n+k-1")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("conditions", help="evaluate necessary and sufficient conditions")
    p.add_argument("--g6", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--decide", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("family", help="print a named family member as graph6")
    p.add_argument("--id", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("spectrum", help="adjacency, signless Laplacian and complement radii")
    p.add_argument("--g6", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("scan", help="randomised certification scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--edge-min", type=int)
    p.add_argument("--edges-free", action="store_true", help="draw m uniformly from [edge_min, C(n,2)]")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="record per-graph wall time (breaks byte-determinism)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run a named acceptance suite")
    p.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except LeafconError as exc:
        print(f"leafcon: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
