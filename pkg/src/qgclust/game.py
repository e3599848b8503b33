"""Payoff matrices, the omega stake, and expected payoffs per pair and player.

The opponent's move is decided by the reverse link: zero strength from j
back to i means j defects, otherwise j plays the cooperative quantum
move of the active strategy case.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .network import PlayerGraph
from .quantum import closed_form_case1, closed_form_case2


class StrategyCase(enum.Enum):
    CASE1 = 1  # Hadamard vs defect
    CASE2 = 2  # strength-parameterized generalized Hadamard vs defect


class PayoffKind(enum.Enum):
    PD_LIKE = "pd"
    SD_LIKE = "sd"


@dataclass(frozen=True)
class PayoffMatrixSpec:
    kind: PayoffKind
    beta: float = 0.2  # snowdrift cost factor, c = beta * omega; ignored for PD

    def __post_init__(self):
        if self.kind is PayoffKind.SD_LIKE and not 0.0 < self.beta <= 0.5:
            raise ValueError(f"SD cost factor beta must lie in (0, 0.5], got {self.beta}")


@dataclass(frozen=True)
class PairPayoffContext:
    strategy_case: StrategyCase
    rho_ij: float
    rho_ji: float
    omega: float


def payoff_entries(spec: PayoffMatrixSpec, omega: float) -> tuple[float, float, float, float]:
    """(R, S, T, P) scaled by the stake omega.

    PD-like: (0.6w, 0.01w, w, 0.2w) so T > R > P > S and 2R > T + S.
    SD-like with c = beta*w: (w - c/2, w - c, w, 0.01w) so T > R > S > P.
    """
    if spec.kind is PayoffKind.PD_LIKE:
        return (0.6 * omega, 0.01 * omega, omega, 0.2 * omega)
    c = spec.beta * omega
    return (omega - c / 2.0, omega - c, omega, 0.01 * omega)


def omega(i: int, j: int, graph: PlayerGraph, in_degrees: np.ndarray | None = None) -> float:
    """Game stake: rho(i,j) * in_degree(j) / d(i,j).

    in_degrees may be passed to avoid recomputing the degree table per pair.
    """
    if j not in graph.strengths[i] and j not in graph.neighbor_sets[i]:
        raise ValueError(f"player {j} is not a neighbor of player {i}")
    deg = graph.in_degree(j) if in_degrees is None else int(in_degrees[j])
    return graph.strength(i, j) * deg / graph.distances[i, j]


def pair_payoff(ctx: PairPayoffContext, spec: PayoffMatrixSpec) -> float:
    """Expected payoff of the pair game: sum of probability * matrix entry."""
    defects = ctx.rho_ji == 0.0
    if ctx.strategy_case is StrategyCase.CASE1:
        probs = closed_form_case1(defects)
    else:
        probs = closed_form_case2(ctx.rho_ij, ctx.rho_ji, defects)
    r, s, t, p = payoff_entries(spec, ctx.omega)
    return float(probs[0] * r + probs[1] * s + probs[2] * t + probs[3] * p)


def player_payoff(
    i: int,
    graph: PlayerGraph,
    spec: PayoffMatrixSpec,
    strategy_case: StrategyCase,
    in_degrees: np.ndarray | None = None,
) -> float:
    """Sum of pair payoffs over i's neighbor set, each at its own stake."""
    nbrs = graph.neighbor_sets[i]
    if not nbrs:
        raise ValueError(f"player {i} has an empty neighbor set")
    if in_degrees is None:
        in_degrees = graph.in_degrees()
    total = 0.0
    for j in nbrs:
        ctx = PairPayoffContext(
            strategy_case=strategy_case,
            rho_ij=graph.strength(i, j),
            rho_ji=graph.strength(j, i),
            omega=omega(i, j, graph, in_degrees),
        )
        total += pair_payoff(ctx, spec)
    return total
