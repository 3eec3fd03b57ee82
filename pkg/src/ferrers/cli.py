"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad diagram, formula precondition,
cross-check failure), 2 usage error.  Payloads go to stdout, diagnostics
to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .christoffel import christoffel_diagram, christoffel_word, q_cells
from .core import Lattice, parse_diagram
from .decomposition import Decomposer, decompose, decompose_alternative, format_alternative
from .errors import FerrersError
from .formulas import (
    avoid_line_count,
    ballot_general,
    bizley_count,
    catalan,
    dyck_count_prime,
    fuss_catalan,
    general_catalan,
)
from .kreweras import branch, build_poset, to_dot, to_json
from .oracle import count_contained, count_contained_steps
from .polynomial import evaluate
from .verify import run_checks

AUTO_CHECK_MAX_CELLS = 64

FORMULAS = {
    "catalan": (catalan, 1),
    "fuss": (fuss_catalan, 2),
    "general": (general_catalan, 2),
    "prime": (dyck_count_prime, 2),
    "ballot": (ballot_general, 3),
    "avoidline": (avoid_line_count, 2),
    "bizley": (bizley_count, 2),
}


class UsageError(Exception):
    pass


def cmd_count(args) -> int:
    d = parse_diagram(args.diagram)
    if args.method == "oracle":
        value = count_contained(d)
    elif args.method == "alternative":
        n, sub = decompose_alternative(d)
        value = catalan(n) - sub.value()
    else:
        value = evaluate(decompose(d))
        if args.method == "auto" and d.cells <= AUTO_CHECK_MAX_CELLS:
            expected = count_contained(d)
            if expected != value:
                print(
                    f"ORACLE MISMATCH for {d.code()}: decomposition {value}, oracle {expected}",
                    file=sys.stderr,
                )
                return 1
    print(value)
    return 0


def cmd_poly(args) -> int:
    d = parse_diagram(args.diagram)
    if args.alternative:
        n, sub = decompose_alternative(d)
        if args.format == "json":
            print(json.dumps({"n": n, "subtracted": sub.to_json()}))
        else:
            print(format_alternative(n, sub))
        return 0
    p = decompose(d)
    print(json.dumps(p.to_json()) if args.format == "json" else p)
    return 0


def cmd_christoffel(args) -> int:
    if args.a < 1 or args.b < 1:
        raise UsageError("lattice sides must be positive integers")
    lat = Lattice(args.a, args.b)
    print(
        json.dumps(
            {
                "diagram": list(christoffel_diagram(lat).rows),
                "word": christoffel_word(lat),
                "cells": q_cells(lat),
            }
        )
    )
    return 0


def cmd_formula(args) -> int:
    fn, arity = FORMULAS[args.name]
    if len(args.args) != arity:
        raise UsageError(f"{args.name} takes {arity} integer argument(s), got {len(args.args)}")
    print(fn(*args.args))
    return 0


def cmd_tree(args) -> int:
    if args.a < 1 or args.b < 1:
        raise UsageError("lattice sides must be positive integers")
    g = build_poset(Lattice(args.a, args.b))
    highlight = parse_diagram(args.branch) if args.branch is not None else None
    size = len(branch(g, highlight)) if highlight is not None else None
    if args.out == "json":
        payload = json.loads(to_json(g))
        if size is not None:
            payload["branch"] = highlight.code()
            payload["branch_size"] = size
        print(json.dumps(payload))
    else:
        sys.stdout.write(to_dot(g, highlight))
        if size is not None:
            print(f"// branch_size={size}")
    return 0


def cmd_verify(args) -> int:
    outcomes = run_checks(args.max_cells, args.max_lattice)
    for o in outcomes:
        if o.passed:
            print(f"PASS {o.name}")
        else:
            print(f"FAIL {o.name}: {o.counterexample}")
    failed = [o for o in outcomes if not o.passed]
    print("FAIL" if failed else "PASS", f"({len(outcomes) - len(failed)}/{len(outcomes)} checks)")
    return 1 if failed else 0


def _timed(fn, repetitions):
    start = time.perf_counter()
    result = None
    for _ in range(repetitions):
        result = fn()
    return result, (time.perf_counter() - start) / repetitions


def cmd_bench(args) -> int:
    d = parse_diagram(args.diagram)
    reps = max(1, args.repetitions)
    report = {"diagram": d.code(), "cells": d.cells, "repetitions": reps}
    for label, memoize in (("decompose_memoized", True), ("decompose_unmemoized", False)):
        splits = []

        def run(memoize=memoize):
            dec = Decomposer(memoize=memoize)
            value = evaluate(dec.decompose(d))
            splits.append(dec.splits)
            return value

        value, seconds = _timed(run, reps)
        report[label] = {"seconds": seconds, "splits": splits[-1], "count": value}
    value, seconds = _timed(lambda: count_contained(d), reps)
    report["oracle_dp"] = {"seconds": seconds, "steps": count_contained_steps(d), "count": value}
    print(json.dumps(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ferrers", description="Count Dyck paths inside Ferrers diagrams."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of paths inside a diagram")
    p.add_argument("diagram", help='comma-separated row lengths, e.g. "2,2,1"; "" for empty')
    p.add_argument(
        "--method", choices=["decompose", "oracle", "alternative", "auto"], default="auto"
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("poly", help="Catalan polynomial of a diagram")
    p.add_argument("diagram")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--alternative", action="store_true", help="subtract from the enclosing staircase")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("christoffel", help="Christoffel diagram and word of an a x b lattice")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_christoffel)

    p = sub.add_parser("formula", help="evaluate a closed-form count")
    p.add_argument("name", choices=sorted(FORMULAS))
    p.add_argument("args", type=int, nargs="*")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("tree", help="containment poset of the Dyck diagrams of a lattice")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--branch", help="diagram whose down-set is highlighted and counted")
    p.add_argument("--out", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--max-cells", type=int, default=12)
    p.add_argument("--max-lattice", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time decomposition against the oracle")
    p.add_argument("diagram")
    p.add_argument("-r", "--repetitions", type=int, default=10)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ferrers: error: {exc}", file=sys.stderr)
        return 2
    except FerrersError as exc:
        print(f"ferrers: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
