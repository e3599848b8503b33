"""Command-line entry point.

Subcommands:
  cluster  run one configuration and write a JSON report
  sweep    cartesian sweep over k and/or beta, written as a CSV table
  trace    per-iteration JSON lines (total payoff, rewired players, entropy)

Exit codes: 0 success, 1 runtime/domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from dataclasses import replace
from pathlib import Path

from .data_io import CsvFormatError, Dataset, RunConfig, load_builtin, load_csv, standardize
from .dynamics import ConvergenceConfig, LrrKind
from .game import PayoffKind, StrategyCase
from .pipeline import run_clustering, run_dynamics

_BUILTINS = {"iris", "wine", "soybean", "breast"}


def _load_dataset(args: argparse.Namespace) -> Dataset:
    name = args.dataset
    if name.lower() in _BUILTINS and not Path(name).exists():
        dataset = load_builtin(name)
    else:
        dataset = load_csv(
            name, has_header=args.header, label_column=args.label_col
        )
    if args.standardize:
        dataset = standardize(dataset)
    return dataset


def _config(args: argparse.Namespace, k: int | None = None, beta: float | None = None) -> RunConfig:
    return RunConfig(
        k=k if k is not None else args.k,
        strategy_case=StrategyCase(args.case),
        payoff=PayoffKind(args.payoff),
        beta=beta if beta is not None else args.beta,
        lrr=LrrKind(args.lrr),
        sigma=args.sigma,
        convergence=ConvergenceConfig(
            max_iters=args.max_iters, eps=args.eps, window=args.window
        ),
        seed=args.seed,
    )


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dataset", required=True,
                        help="builtin name (iris, wine, soybean, breast) or CSV path")
    parser.add_argument("--label-col", type=int, default=None,
                        help="0-based label column for CSV paths")
    parser.add_argument("--header", action="store_true", help="CSV has a header row")
    parser.add_argument("--standardize", action="store_true")
    parser.add_argument("--case", type=int, choices=(1, 2), default=1)
    parser.add_argument("--payoff", choices=("pd", "sd"), default="pd")
    parser.add_argument("--beta", type=float, default=0.2)
    parser.add_argument("--lrr", choices=("l1", "l2"), default="l1")
    parser.add_argument("--sigma", type=float, default=1.0)
    parser.add_argument("--clusters", type=int, default=None,
                        help="preset cluster count K (default: number of classes)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-iters", type=int, default=100)
    parser.add_argument("--eps", type=float, default=1e-3)
    parser.add_argument("--window", type=int, default=5)
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    parser.add_argument("--timing", action="store_true",
                        help="include wall_time in the report (breaks byte determinism)")


def _open_out(path: str):
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def cmd_cluster(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args)
    report = run_clustering(dataset, _config(args), preset=args.clusters, timing=args.timing)
    out = _open_out(args.out)
    try:
        json.dump(report, out, indent=2)
        out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args)
    k_values = list(range(args.k_min, args.k_max + 1, args.k_step))
    beta_values = args.beta_values or [args.beta]
    if not k_values:
        raise SystemExit(2)
    out = _open_out(args.out)
    try:
        writer = csv.writer(out)
        writer.writerow(
            ["k", "case", "payoff", "beta", "lrr", "accuracy", "iterations", "raw_clusters"]
        )
        for k, beta in itertools.product(k_values, beta_values):
            report = run_clustering(
                dataset, _config(args, k=k, beta=beta), preset=args.clusters
            )
            writer.writerow(
                [
                    k,
                    args.case,
                    args.payoff,
                    beta,
                    args.lrr,
                    "" if report["accuracy"] is None else f"{report['accuracy']:.6f}",
                    report["iterations"],
                    report["raw_cluster_count"],
                ]
            )
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    dataset = _load_dataset(args)
    config = _config(args)
    trajectory = run_dynamics(dataset, config)
    out = _open_out(args.out)
    try:
        for i in range(trajectory.iterations):
            line = {
                "iteration": i + 1,
                "total_payoff": trajectory.total_payoff_history[i],
                "rewired_players": trajectory.rewired_counts[i],
                "strength_entropy": trajectory.entropies[i],
            }
            out.write(json.dumps(line) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgclust",
                                     description="Clustering by quantum games on a knn network")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cluster = sub.add_parser("cluster", help="run one configuration")
    _add_common(p_cluster)
    p_cluster.add_argument("--k", type=int, required=True)
    p_cluster.set_defaults(func=cmd_cluster)

    p_sweep = sub.add_parser("sweep", help="sweep k and/or beta")
    _add_common(p_sweep)
    p_sweep.add_argument("--k-min", type=int, required=True)
    p_sweep.add_argument("--k-max", type=int, required=True)
    p_sweep.add_argument("--k-step", type=int, default=1)
    p_sweep.add_argument("--beta-values", type=float, nargs="*", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    p_trace = sub.add_parser("trace", help="per-iteration JSON lines")
    _add_common(p_trace)
    p_trace.add_argument("--k", type=int, required=True)
    p_trace.set_defaults(func=cmd_trace)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, CsvFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
