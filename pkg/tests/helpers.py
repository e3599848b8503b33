"""Independent oracles shared by the unit and acceptance tests.

These deliberately avoid the closed-form fast paths in the package: the
engine oracle multiplies out the 4x4 complex matrices, and the accuracy
oracle enumerates label permutations.
"""

import itertools

import numpy as np

from qgclust.game import PayoffMatrixSpec, StrategyCase, payoff_entries
from qgclust.quantum import (
    final_state,
    outcome_probabilities,
    strategy_d,
    strategy_f,
    strategy_h,
)


def engine_probabilities(case: StrategyCase, rho_ij: float, rho_ji: float) -> np.ndarray:
    """Outcome probabilities computed through the full two-qubit engine."""
    defects = rho_ji == 0.0
    if case is StrategyCase.CASE1:
        y1 = strategy_h()
        y2 = strategy_d() if defects else strategy_h()
    else:
        y1 = strategy_f(rho_ij)
        y2 = strategy_d() if defects else strategy_f(rho_ji)
    return outcome_probabilities(final_state(y1, y2))


def engine_pair_payoff(
    case: StrategyCase, rho_ij: float, rho_ji: float, omega: float, spec: PayoffMatrixSpec
) -> float:
    probs = engine_probabilities(case, rho_ij, rho_ji)
    r, s, t, p = payoff_entries(spec, omega)
    return float(probs @ np.array([r, s, t, p]))


def brute_force_accuracy(pred: np.ndarray, truth: np.ndarray) -> float:
    """Best label-mapping accuracy by enumerating all injective maps."""
    pred_ids = list(np.unique(pred))
    true_ids = list(np.unique(truth))
    small, large = (pred_ids, true_ids) if len(pred_ids) <= len(true_ids) else (true_ids, pred_ids)
    best = 0
    for perm in itertools.permutations(large, len(small)):
        if len(pred_ids) <= len(true_ids):
            mapping = dict(zip(pred_ids, perm))
            matches = sum(1 for p, t in zip(pred, truth) if mapping[p] == t)
        else:
            mapping = dict(zip(perm, true_ids))
            matches = sum(1 for p, t in zip(pred, truth) if mapping.get(p) == t)
        best = max(best, matches)
    return best / len(pred)
