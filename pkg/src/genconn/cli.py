"""Command-line front end: solve, reduce, verify.

Exit codes: 0 success, 1 verification found equivalence failures,
2 parse/validation error, 3 guard refusal.  stdout carries exactly the
machine-readable result; diagnostics go to stderr.  The environment
variable ``GENCONN_FORCE=1`` overrides the desk-scale size guards (the
random seed can only be set by flag, never by environment).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from . import io, reductions, solver, verify
from .graphs import Graph, GraphError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _parse_terminal_flag(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise GraphError(f"malformed terminal list {raw!r}; expected e.g. 0,2,5")


def _load_graph_and_set(args) -> tuple[Graph, tuple[int, ...] | None]:
    g, file_set = io.parse_graph_and_set(_read(args.input))
    if getattr(args, "terminals", None):
        return g, _parse_terminal_flag(args.terminals)
    return g, file_set


def _force(args) -> bool:
    return bool(getattr(args, "force", False)) or os.environ.get("GENCONN_FORCE") == "1"


def _cmd_solve(args) -> int:
    g, terminals = _load_graph_and_set(args)
    problem = args.problem
    need_set = problem in ("kappa-set", "lambda-set")
    if need_set and not terminals:
        raise GraphError(f"{problem} requires -S or a 'set' line in the graph file")

    if problem in ("kappa", "lambda"):
        value = solver.classical_kappa(g) if problem == "kappa" else solver.classical_lambda(g)
        print(value)
        return EXIT_OK

    if problem in ("kappa-k", "lambda-k"):
        if args.k is None:
            raise GraphError(f"{problem} requires -k")
        fn = solver.kappa_k if problem == "kappa-k" else solver.lambda_k
        print(fn(g, args.k, force=_force(args)))
        return EXIT_OK

    assert need_set and terminals is not None
    if args.decide is not None:
        fn = solver.decide_kappa_set if problem == "kappa-set" else solver.decide_lambda_set
        print("yes" if fn(g, terminals, args.decide) else "no")
        return EXIT_OK
    fn = solver.kappa_set if problem == "kappa-set" else solver.lambda_set
    result = fn(g, terminals)
    print(result.value)
    if args.witness:
        for tree in result.witness:
            print("tree: " + " ; ".join(f"e {u} {v}" for u, v in tree.edges))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    kind = args.kind
    label = "l"
    if kind == "3dm-p1":
        out = reductions.reduce_3dm_to_p1_with_roles(io.parse_3dm(_read(args.input)))
        label = "q"
    elif kind == "p1-kappa":
        g = io.parse_graph(_read(args.input))
        out = reductions.reduce_p1_to_kappa(g)
        label = "q"
    elif kind == "linegraph":
        g, terminals = _load_graph_and_set(args)
        if not terminals:
            raise GraphError("linegraph requires -S or a 'set' line in the graph file")
        out = reductions.reduce_lambda_to_kappa(g, terminals)
    elif kind == "expand-k":
        g, terminals = _load_graph_and_set(args)
        if not terminals or args.l is None or args.k is None:
            raise GraphError("expand-k requires terminals, --k and --l")
        out = reductions.reduce_lambda3_to_lambdak(g, terminals, args.l, args.k)
    elif kind == "3sat-lambda2":
        out = reductions.reduce_3sat_to_lambda2(io.parse_cnf(_read(args.input)))
    else:  # expand-l
        g, terminals = _load_graph_and_set(args)
        if not terminals or args.l is None:
            raise GraphError("expand-l requires terminals and --l")
        out = reductions.reduce_lambda2_to_lambdal(g, terminals, args.l)

    with open(args.output, "w", encoding="utf-8") as f:
        f.write(io.serialize_reduction(out))
    threshold = "-" if out.threshold is None else str(out.threshold)
    print(f"V={out.graph.n} E={out.graph.m} {label}={threshold}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(verify.REDUCTION_NAMES) if args.reduction == "all" else [args.reduction]
    exit_code = EXIT_OK
    chunks = []
    for name in names:
        budget = verify.DEFAULT_BUDGETS.get(name)
        if budget is None:
            raise GraphError(
                f"unknown reduction {args.reduction!r}; "
                f"expected one of {verify.REDUCTION_NAMES} or 'all'"
            )
        if args.max_n is not None:
            budget = replace(budget, max_n=args.max_n)
        if args.seed is not None:
            budget = replace(budget, seed=args.seed)
        report = verify.verify_reduction(name, budget)
        chunks.append(report.text())
        # stdout stays byte-identical across runs; timing lives in the file
        print(report.summary_line(with_time=False), flush=True)
        if not report.passed:
            exit_code = EXIT_VERIFY_FAILED
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write("\n".join(chunks))
    return exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genconn",
        description="Exact generalized-connectivity solving, reductions, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute or decide a connectivity value")
    p_solve.add_argument(
        "problem",
        choices=["kappa-set", "lambda-set", "kappa-k", "lambda-k", "kappa", "lambda"],
    )
    p_solve.add_argument("-g", "--graph", "-i", "--input", dest="input", required=True,
                         help="graph file")
    p_solve.add_argument("-S", "--set", dest="terminals",
                         help="comma-separated 0-based terminal ids")
    p_solve.add_argument("-k", type=int, help="terminal-set size for kappa-k/lambda-k")
    p_solve.add_argument("--decide", type=int, metavar="L",
                         help="decide value >= L instead of maximizing")
    p_solve.add_argument("--witness", action="store_true",
                         help="print the witness trees")
    p_solve.add_argument("--force", action="store_true",
                         help="override desk-scale size guards")
    p_solve.set_defaults(run=_cmd_solve)

    p_reduce = sub.add_parser("reduce", help="apply an instance transformation")
    p_reduce.add_argument(
        "kind",
        choices=["3dm-p1", "p1-kappa", "linegraph", "expand-k", "3sat-lambda2", "expand-l"],
    )
    p_reduce.add_argument("-i", "--input", "-g", "--graph", dest="input", required=True)
    p_reduce.add_argument("-o", "--output", required=True)
    p_reduce.add_argument("-S", "--set", dest="terminals",
                          help="comma-separated 0-based terminal ids")
    p_reduce.add_argument("--k", type=int, help="target terminal count (expand-k)")
    p_reduce.add_argument("--l", type=int, help="packing threshold (expand-k, expand-l)")
    p_reduce.set_defaults(run=_cmd_reduce)

    p_verify = sub.add_parser("verify", help="certify reductions against oracles")
    p_verify.add_argument("--reduction", required=True,
                          help="one of R1..R6, or 'all'")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--out", help="write the full report to this file")
    p_verify.set_defaults(run=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.run(args)
    except solver.GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, io.FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
