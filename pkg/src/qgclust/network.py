"""Weighted directed knn network over the players.

Each player i keeps an ordered neighbor set Gamma(i) (always containing i
at t=0, since d(i,i)=1 is minimal) and a strength rho(i,j) on each
outgoing link, normalized so that every player's outgoing strengths sum
to one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class DistanceConfig:
    sigma: float = 1.0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")


def distance(xi, xj, cfg: DistanceConfig = DistanceConfig()) -> float:
    """exp(||xi - xj|| / (2 sigma^2)); minimum 1, reciprocal in (0, 1]."""
    xi = np.asarray(xi, dtype=float)
    xj = np.asarray(xj, dtype=float)
    if xi.shape != xj.shape:
        raise ValueError(f"dimension mismatch: {xi.shape} vs {xj.shape}")
    return float(np.exp(np.linalg.norm(xi - xj) / (2.0 * cfg.sigma**2)))


def distance_matrix(points: np.ndarray, cfg: DistanceConfig = DistanceConfig()) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    sq = np.sum(points**2, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * points @ points.T
    np.maximum(d2, 0.0, out=d2)
    d = np.exp(np.sqrt(d2) / (2.0 * cfg.sigma**2))
    np.fill_diagonal(d, 1.0)
    return d


@dataclass
class PlayerGraph:
    """Directed knn graph with per-edge distances and link strengths.

    neighbor_sets[i] is a sorted list of player ids; strengths[i] maps
    neighbor id -> rho(i, j).  Absent edges have strength zero.
    """

    n: int
    k: int
    distances: np.ndarray
    neighbor_sets: list[list[int]] = field(default_factory=list)
    strengths: list[dict[int, float]] = field(default_factory=list)

    def strength(self, i: int, j: int) -> float:
        return self.strengths[i].get(j, 0.0)

    def in_degrees(self) -> np.ndarray:
        """Number of players holding each j in their neighbor set (self-loops count)."""
        deg = np.zeros(self.n, dtype=int)
        for nbrs in self.neighbor_sets:
            for j in nbrs:
                deg[j] += 1
        return deg

    def in_degree(self, j: int) -> int:
        return int(self.in_degrees()[j])

    def copy(self) -> "PlayerGraph":
        return PlayerGraph(
            n=self.n,
            k=self.k,
            distances=self.distances,
            neighbor_sets=[list(nbrs) for nbrs in self.neighbor_sets],
            strengths=[dict(s) for s in self.strengths],
        )


def build_knn(points: np.ndarray, k: int, cfg: DistanceConfig = DistanceConfig()) -> PlayerGraph:
    """knn graph under the exponential distance; ties broken by lowest index.

    Every player is among its own k nearest neighbors (self-distance 1).
    """
    points = np.asarray(points, dtype=float)
    n = len(points)
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n, got k={k}, n={n}")
    dmat = distance_matrix(points, cfg)
    graph = PlayerGraph(n=n, k=k, distances=dmat)
    for i in range(n):
        order = sorted(range(n), key=lambda j: (dmat[i, j], j))
        graph.neighbor_sets.append(sorted(order[:k]))
        graph.strengths.append({})
    return graph


def init_strengths(graph: PlayerGraph) -> PlayerGraph:
    """Uniform initial strengths: rho_0(i, j) = 1/k for j in Gamma_0(i)."""
    for i, nbrs in enumerate(graph.neighbor_sets):
        w = 1.0 / len(nbrs)
        graph.strengths[i] = {j: w for j in nbrs}
    return graph
