#!/usr/bin/env python3
"""Best-over-k accuracy for all eight algorithm variants on the benchmark datasets.

Prints one row per (dataset, variant) with the best merged-partition
accuracy over k in [4, 20], mirroring the benchmark-table layout.
"""

import itertools
import sys

from qgclust import LrrKind, PayoffKind, RunConfig, StrategyCase, best_over_k
from qgclust.data_io import load_builtin, standardize

DATASETS = ["soybean", "iris", "wine", "breast"]


def main() -> int:
    print(f"{'dataset':<10} {'algorithm':<10} {'best_acc':>8} {'best_k':>6}")
    for name in DATASETS:
        try:
            ds = load_builtin(name)
        except FileNotFoundError:
            print(f"{name:<10} (data file missing; run scripts/fetch_datasets.py)")
            continue
        if name == "wine":
            ds = standardize(ds)
        for case, payoff, lrr in itertools.product(StrategyCase, PayoffKind, LrrKind):
            cfg = RunConfig(k=4, strategy_case=case, payoff=payoff, lrr=lrr)
            acc, k = best_over_k(ds, cfg, range(4, min(21, ds.n)))
            print(f"{name:<10} {cfg.algorithm_name:<10} {acc:>8.3f} {k:>6}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
