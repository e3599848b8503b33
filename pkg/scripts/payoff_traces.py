#!/usr/bin/env python3
"""Total-payoff convergence traces for the four Case-1 variants on Iris.

Writes one JSON-lines file per variant into traces/ (plot-ready: iteration,
total payoff, rewired players, mean strength entropy).
"""

import json
import sys
from pathlib import Path

from qgclust import ConvergenceConfig, LrrKind, PayoffKind, RunConfig, StrategyCase, run_dynamics
from qgclust.data_io import load_builtin

OUT_DIR = Path("traces")


def main() -> int:
    OUT_DIR.mkdir(exist_ok=True)
    ds = load_builtin("iris")
    for payoff in PayoffKind:
        for lrr in LrrKind:
            cfg = RunConfig(
                k=10, strategy_case=StrategyCase.CASE1, payoff=payoff, lrr=lrr,
                convergence=ConvergenceConfig(max_iters=30, eps=1e-15),
            )
            traj = run_dynamics(ds, cfg)
            path = OUT_DIR / f"{cfg.algorithm_name.lower()}_iris.jsonl"
            with path.open("w") as fh:
                for i in range(traj.iterations):
                    fh.write(json.dumps({
                        "iteration": i + 1,
                        "total_payoff": traj.total_payoff_history[i],
                        "rewired_players": traj.rewired_counts[i],
                        "strength_entropy": traj.entropies[i],
                    }) + "\n")
            print(f"wrote {path} ({traj.iterations} iterations)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
