"""Command-line entry point.

Exit codes: 0 success, 1 violation or counterexample found, 2 usage or
parse error, 3 budget or size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from lcfree import generators as gen
from lcfree.construct import independent_two_fifths, rho_partition, three_coloring
from lcfree.core import Hypergraph, min_strong_degree
from lcfree.cycles import find_linear_cycle
from lcfree.errors import (
    CapExceeded,
    CaseContradiction,
    ColoringViolation,
    DegenerateEdge,
    IndependenceViolation,
    ParseError,
    SearchBudgetExceeded,
    VertexOutOfRange,
)
from lcfree.harness import CHECKS, parse_corpus
from lcfree.oracle import exact_alpha
from lcfree.textformat import emit, load, parse

__all__ = ["emit", "main", "parse"]

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 already; keep it explicit
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _print(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _cmd_analyze(h: Hypergraph, args) -> int:
    cert = find_linear_cycle(h, args.budget)
    d0, _ = min_strong_degree(h, 0)
    report = {
        "n": h.n,
        "m": h.m,
        "cycle_free": cert is None,
        "certificate": [list(e) for e in cert.edges] if cert else None,
        "min_strong_degree": d0,
    }
    status = EXIT_OK
    if cert is None:
        res = independent_two_fifths(h, args.budget)
        report["independent_set_size"] = len(res.S)
        report["alpha_bound_holds"] = 5 * len(res.S) >= 2 * h.n
        if not report["alpha_bound_holds"]:
            status = EXIT_VIOLATION
    _print(report)
    return status


def _cmd_cycle(h: Hypergraph, args) -> int:
    cert = find_linear_cycle(h, args.budget)
    _print({"cycle_free": cert is None,
            "certificate": [list(e) for e in cert.edges] if cert else None})
    return EXIT_OK


def _cmd_alpha(h: Hypergraph, args) -> int:
    alpha, witness = exact_alpha(h, args.cap)
    _print({"n": h.n, "alpha": alpha, "witness": sorted(witness)})
    return EXIT_OK


def _cmd_indep(h: Hypergraph, args) -> int:
    res = independent_two_fifths(h, args.budget)
    _print({
        "n": h.n,
        "size": len(res.S),
        "S": sorted(res.S),
        "Z": sorted(res.Z),
        "trace": res.trace_dicts(),
    })
    return EXIT_OK


def _cmd_color(h: Hypergraph, args) -> int:
    color = three_coloring(h)
    _print({"colors": [color[v] for v in range(h.n)]})
    return EXIT_OK


def _cmd_partition(h: Hypergraph, args) -> int:
    classes = rho_partition(h)
    _print({"classes": [sorted(c) for c in classes], "count": len(classes)})
    return EXIT_OK


GEN_ARITY = {
    "k53": (gen.complete_k53, 1, False),
    "star": (gen.full_star, 1, False),
    "tight": (gen.tight_two_exceptions, 1, False),
    "path": (gen.linear_path, 1, False),
    "cyclegen": (gen.linear_cycle_gen, 1, False),
    "random": (gen.random_hypergraph, 2, True),
    "randomfree": (gen.random_cycle_free, 2, True),
}


def _cmd_gen(args) -> int:
    fn, arity, seeded = GEN_ARITY[args.family]
    if len(args.params) != arity:
        print(f"gen {args.family} takes {arity} integer parameter(s)", file=sys.stderr)
        return EXIT_USAGE
    extra = (args.seed,) if seeded else ()
    sys.stdout.write(emit(fn(*args.params, *extra)))
    return EXIT_OK


def _cmd_check(args) -> int:
    corpus = parse_corpus(args.corpus)
    report = CHECKS[args.name](corpus, budget=args.budget, workers=args.workers)
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    if report.violations:
        return EXIT_VIOLATION
    if report.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


FILE_COMMANDS = {
    "analyze": _cmd_analyze,
    "cycle": _cmd_cycle,
    "alpha": _cmd_alpha,
    "indep": _cmd_indep,
    "color": _cmd_color,
    "partition": _cmd_partition,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lcfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in FILE_COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.add_argument("--budget", type=int, default=10**7)
        if name == "alpha":
            sp.add_argument("--cap", type=int, default=24)
    g = sub.add_parser("gen")
    g.add_argument("family", choices=sorted(GEN_ARITY))
    g.add_argument("params", type=int, nargs="*")
    g.add_argument("--seed", type=int, default=0)
    c = sub.add_parser("check")
    c.add_argument("name", choices=sorted(CHECKS))
    c.add_argument("--corpus", required=True)
    c.add_argument("--out")
    c.add_argument("--budget", type=int, default=10**7)
    c.add_argument("--workers", type=int, default=1)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "check":
            return _cmd_check(args)
        return FILE_COMMANDS[args.command](load(args.file), args)
    except (ParseError, VertexOutOfRange, DegenerateEdge, OSError, ValueError) as exc:
        if isinstance(exc, CapExceeded):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchBudgetExceeded,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CaseContradiction, IndependenceViolation, ColoringViolation) as exc:
        print(json.dumps({"violation": type(exc).__name__, "details": str(exc)}))
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
