"""Command-line front end: analyze, rgg, sweep, verify.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 redundancy
order out of range.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .errors import KOutOfRangeError, ParseError, RigidnetError
from .geometric import dump_deployment, geometric_graph, sample_deployment
from .graph import dump_edge_list, load_edge_list
from .indices import analyze, format_report, redundancy_index, rigidity_index
from .matroid import matroid_rank
from .numeric import generic_rank
from .sweep import (
    REDUNDANCY,
    RIGIDITY,
    ratio_grid,
    relative_increase,
    sweep_average,
    threshold_ratio,
    write_curve_csv,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_RANGE = 3


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator} ({float(value):.6f})"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigidnet",
        description="Rigidity and redundancy analysis of network graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="index report for an edge-list file")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--k", type=int, default=None,
                   help="also compute the order-k redundancy index")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("rgg", help="sample a deployment and its graph")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--side", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--out", required=True,
                   help="output stem; writes <out>.deployment and <out>.edgelist")

    p = sub.add_parser("sweep", help="average indices across a ratio grid")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--side", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--step", type=Fraction, required=True,
                   help="ratio grid step, e.g. 0.01")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--svg", default=None, help="optional SVG chart path")

    p = sub.add_parser("verify", help="combinatorial vs numeric rank check")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--seeds", type=int, default=5,
                   help="number of random placements (default 5)")

    return parser


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        g = load_edge_list(args.input)
    except ParseError as exc:
        return _fail(f"{args.input}: {exc}", EXIT_INPUT)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)
    try:
        report = analyze(g, with_k=args.k)
    except KOutOfRangeError as exc:
        return _fail(str(exc), EXIT_RANGE)
    sys.stdout.write(format_report(report, machine=args.format == "machine"))
    return EXIT_OK


def cmd_rgg(args: argparse.Namespace) -> int:
    if args.nodes < 0:
        return _fail(f"--nodes must be nonnegative, got {args.nodes}", EXIT_INPUT)
    if args.side <= 0:
        return _fail(f"--side must be positive, got {args.side}", EXIT_INPUT)
    if args.radius < 0:
        return _fail(f"--radius must be nonnegative, got {args.radius}", EXIT_INPUT)
    dep = sample_deployment(args.nodes, args.side, args.seed)
    g = geometric_graph(dep, args.radius)
    deployment_path = f"{args.out}.deployment"
    edgelist_path = f"{args.out}.edgelist"
    try:
        dump_deployment(dep, deployment_path)
        dump_edge_list(g, edgelist_path)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)
    print(f"wrote {deployment_path}")
    print(f"wrote {edgelist_path}")
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"k_r {_frac(rigidity_index(g))}")
    print(f"k_u {_frac(redundancy_index(g))}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.nodes < 0:
        return _fail(f"--nodes must be nonnegative, got {args.nodes}", EXIT_INPUT)
    if args.side <= 0:
        return _fail(f"--side must be positive, got {args.side}", EXIT_INPUT)
    if args.trials < 1:
        return _fail(f"--trials must be >= 1, got {args.trials}", EXIT_INPUT)
    if args.step <= 0 or args.step > 1:
        return _fail(f"--step must lie in (0, 1], got {args.step}", EXIT_INPUT)
    grid = ratio_grid(args.step)
    curve = sweep_average(args.nodes, args.side, args.trials, grid, args.seed)
    try:
        write_curve_csv(curve, args.csv)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)
    print(f"wrote {args.csv}")
    if args.svg is not None:
        from .plotting import render_sweep_chart

        try:
            render_sweep_chart(curve, args.svg)
        except OSError as exc:
            return _fail(str(exc), EXIT_INPUT)
        print(f"wrote {args.svg}")
    t_r = threshold_ratio(curve, RIGIDITY)
    t_u = threshold_ratio(curve, REDUNDANCY)
    rel = relative_increase(curve)
    print(f"rigidity_threshold {float(t_r):.6f}" if t_r is not None
          else "rigidity_threshold none")
    print(f"redundancy_threshold {float(t_u):.6f}" if t_u is not None
          else "redundancy_threshold none")
    print(f"relative_increase {float(rel):.6f}" if rel is not None
          else "relative_increase none")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = load_edge_list(args.input)
    except ParseError as exc:
        return _fail(f"{args.input}: {exc}", EXIT_INPUT)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)
    if args.seeds < 1:
        return _fail(f"--seeds must be >= 1, got {args.seeds}", EXIT_INPUT)
    rank = matroid_rank(g)
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"combinatorial_rank {rank}")
    agree = True
    for seed in range(args.seeds):
        numeric = generic_rank(g, seed)
        print(f"generic_rank seed={seed} {numeric}")
        if numeric != rank:
            agree = False
    print(f"verdict {'agree' if agree else 'MISMATCH'}")
    return EXIT_OK if agree else EXIT_VERIFY_FAILED


_COMMANDS = {
    "analyze": cmd_analyze,
    "rgg": cmd_rgg,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except RigidnetError as exc:
        # Anything not handled closer to the call site is an input problem.
        return _fail(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
