"""Per-iteration engine: payoff sweep, LRR rewiring, strength updates.

Every iteration reads a frozen snapshot of the graph at t-1 and commits
all per-player updates simultaneously, so the order in which players are
processed never matters.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .game import PayoffMatrixSpec, StrategyCase, player_payoff
from .network import PlayerGraph


class LrrKind(enum.Enum):
    L1 = "l1"  # threshold = alpha-th largest neighbor payoff, alpha = floor(k/2)
    L2 = "l2"  # threshold = mean neighbor payoff


@dataclass(frozen=True)
class ConvergenceConfig:
    max_iters: int = 100
    eps: float = 1e-3
    window: int = 5

    def __post_init__(self):
        if self.max_iters < 0 or self.eps <= 0 or self.window <= 0:
            raise ValueError("max_iters must be >= 0, eps and window positive")


@dataclass
class IterationState:
    graph: PlayerGraph
    payoffs: np.ndarray | None = None
    total_payoff_history: list[float] = field(default_factory=list)
    t: int = 0


@dataclass
class Trajectory:
    state: IterationState
    converged: bool
    iterations: int
    rewired_counts: list[int] = field(default_factory=list)
    entropies: list[float] = field(default_factory=list)

    @property
    def total_payoff_history(self) -> list[float]:
        return self.state.total_payoff_history


def payoff_sweep(
    state: IterationState, spec: PayoffMatrixSpec, strategy_case: StrategyCase
) -> np.ndarray:
    """All players' expected payoffs on the frozen graph; total goes to history."""
    graph = state.graph
    in_deg = graph.in_degrees()
    z = np.array(
        [player_payoff(i, graph, spec, strategy_case, in_deg) for i in range(graph.n)]
    )
    state.payoffs = z
    state.total_payoff_history.append(float(z.sum()))
    return z


def threshold(i: int, state: IterationState, kind: LrrKind) -> float:
    """Payoff threshold over i's neighbors: alpha-th largest (L1) or mean (L2)."""
    nbrs = state.graph.neighbor_sets[i]
    z = state.payoffs
    vals = [z[j] for j in nbrs]
    if kind is LrrKind.L1:
        alpha = max(1, len(vals) // 2)
        return float(sorted(vals, reverse=True)[alpha - 1])
    return float(sum(vals) / len(vals))


def extended_set(i: int, state: IterationState, theta: float) -> set[int]:
    """Union of the neighbor sets of i's at-or-above-threshold neighbors."""
    graph = state.graph
    z = state.payoffs
    upsilon: set[int] = set()
    for j in graph.neighbor_sets[i]:
        if z[j] >= theta:
            upsilon.update(graph.neighbor_sets[j])
    return upsilon


def lrr_apply(i: int, state: IterationState, kind: LrrKind) -> list[int]:
    """New neighbor set: the top-k payoffs in Gamma(i) union Upsilon(i).

    Keeps the old set when the extended set offers nothing better, or (L2)
    when all neighbor payoffs tie the mean threshold.  Ties favor retained
    neighbors, then lower index.
    """
    graph = state.graph
    z = state.payoffs
    old = graph.neighbor_sets[i]
    theta = threshold(i, state, kind)
    if kind is LrrKind.L2 and all(z[j] == theta for j in old):
        return list(old)
    upsilon = extended_set(i, state, theta)
    if not upsilon:
        return list(old)
    if min(z[j] for j in old) >= max(z[h] for h in upsilon):
        return list(old)
    old_set = set(old)
    candidates = old_set | upsilon
    ranked = sorted(candidates, key=lambda j: (-z[j], 0 if j in old_set else 1, j))
    return sorted(ranked[: len(old)])


def redistribute_strengths(
    old_nbrs: list[int], new_nbrs: list[int], strengths: dict[int, float]
) -> dict[int, float]:
    """Retained links keep their strength; dropped mass is split over new links."""
    old_set, new_set = set(old_nbrs), set(new_nbrs)
    added = new_set - old_set
    if not added:
        return dict(strengths)
    dropped_mass = sum(strengths.get(h, 0.0) for h in old_set - new_set)
    share = dropped_mass / len(added)
    return {j: (share if j in added else strengths.get(j, 0.0)) for j in new_nbrs}


def grover_adjust(
    new_nbrs: list[int], strengths: dict[int, float], payoffs: np.ndarray
) -> dict[int, float]:
    """Inversion about average on square-root strengths.

    The max-payoff neighbor's amplitude is negated before the inversion,
    which concentrates strength on it while keeping the sum at one.
    """
    m = min(new_nbrs, key=lambda j: (-payoffs[j], j))
    a = {j: math.sqrt(strengths.get(j, 0.0)) for j in new_nbrs}
    a[m] = -a[m]
    ave = sum(a.values()) / len(new_nbrs)
    return {j: (2.0 * ave - a[j]) ** 2 for j in new_nbrs}


def step(
    state: IterationState,
    spec: PayoffMatrixSpec,
    strategy_case: StrategyCase,
    lrr_kind: LrrKind,
) -> tuple[IterationState, int]:
    """One synchronous iteration; returns the new state and the rewired-player count."""
    if state.payoffs is None or len(state.total_payoff_history) < state.t + 1:
        payoff_sweep(state, spec, strategy_case)
    graph = state.graph
    new_graph = PlayerGraph(
        n=graph.n, k=graph.k, distances=graph.distances, neighbor_sets=[], strengths=[]
    )
    rewired = 0
    for i in range(graph.n):
        new_nbrs = lrr_apply(i, state, lrr_kind)
        if new_nbrs != graph.neighbor_sets[i]:
            rewired += 1
        formed = redistribute_strengths(graph.neighbor_sets[i], new_nbrs, graph.strengths[i])
        adjusted = grover_adjust(new_nbrs, formed, state.payoffs)
        new_graph.neighbor_sets.append(new_nbrs)
        new_graph.strengths.append(adjusted)
    new_state = IterationState(
        graph=new_graph,
        payoffs=None,
        total_payoff_history=list(state.total_payoff_history),
        t=state.t + 1,
    )
    return new_state, rewired


def mean_strength_entropy(graph: PlayerGraph) -> float:
    """Mean Shannon entropy (nats) of per-player strength distributions."""
    total = 0.0
    for s in graph.strengths:
        total += -sum(v * math.log(v) for v in s.values() if v > 0.0)
    return total / graph.n


def run(
    initial: IterationState,
    cfg: ConvergenceConfig,
    spec: PayoffMatrixSpec,
    strategy_case: StrategyCase,
    lrr_kind: LrrKind,
) -> Trajectory:
    """Iterate until the total payoff is flat for `window` consecutive steps.

    Convergence: |Z_t - Z_{t-1}| / max(|Z_{t-1}|, 1e-12) < eps on `window`
    consecutive steps, or the iteration cap.
    """
    state = initial
    flat_streak = 0
    converged = False
    rewired_counts: list[int] = []
    entropies: list[float] = []
    iterations = 0
    for _ in range(cfg.max_iters):
        state, rewired = step(state, spec, strategy_case, lrr_kind)
        iterations += 1
        rewired_counts.append(rewired)
        entropies.append(mean_strength_entropy(state.graph))
        hist = state.total_payoff_history
        if len(hist) >= 2:
            prev, cur = hist[-2], hist[-1]
            rel = abs(cur - prev) / max(abs(prev), 1e-12)
            flat_streak = flat_streak + 1 if rel < cfg.eps else 0
            if flat_streak >= cfg.window:
                converged = True
                break
    return Trajectory(
        state=state,
        converged=converged,
        iterations=iterations,
        rewired_counts=rewired_counts,
        entropies=entropies,
    )
