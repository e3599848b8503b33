"""Cluster extraction from the converged graph, merging, and accuracy scoring."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .network import PlayerGraph


@dataclass
class ClusterResult:
    labels: np.ndarray
    raw_cluster_count: int
    accuracy: float | None = None


def _components(n: int, edges: list[tuple[int, int]]) -> np.ndarray:
    """Weakly connected components via union-find; labels numbered by first occurrence."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    labels = np.empty(n, dtype=int)
    seen: dict[int, int] = {}
    for i in range(n):
        root = find(i)
        if root not in seen:
            seen[root] = len(seen)
        labels[i] = seen[root]
    return labels


def strongest_link_partition(graph: PlayerGraph) -> np.ndarray:
    """Keep each player's single strongest outgoing link; label weak components.

    A self-loop only wins when it is the sole neighbor; otherwise the best
    non-self neighbor is kept (universal self-selection would shatter the
    partition into singletons).  Ties go to the lowest index.
    """
    edges: list[tuple[int, int]] = []
    for i, nbrs in enumerate(graph.neighbor_sets):
        others = [j for j in nbrs if j != i]
        if not others:
            continue
        best = min(others, key=lambda j: (-graph.strength(i, j), j))
        edges.append((i, best))
    return _components(graph.n, edges)


def merge_to_k(labels: np.ndarray, points: np.ndarray, preset: int) -> np.ndarray:
    """Merge the smallest cluster into its nearest-centroid cluster until preset count.

    Returns labels unchanged when the raw count is already <= preset.
    """
    if preset < 1:
        raise ValueError(f"preset cluster count must be >= 1, got {preset}")
    labels = np.asarray(labels).copy()
    points = np.asarray(points, dtype=float)
    while True:
        ids = np.unique(labels)
        if len(ids) <= preset:
            break
        sizes = {c: int(np.sum(labels == c)) for c in ids}
        smallest = min(ids, key=lambda c: (sizes[c], c))
        centroids = {c: points[labels == c].mean(axis=0) for c in ids}
        target = min(
            (c for c in ids if c != smallest),
            key=lambda c: (np.linalg.norm(centroids[c] - centroids[smallest]), c),
        )
        labels[labels == smallest] = target
    return labels


def accuracy(pred: np.ndarray, truth: np.ndarray) -> float:
    """Fraction of points correct under the best one-to-one label mapping.

    The mapping is the maximum-matches assignment on the contingency table
    between predicted and true label ids.
    """
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.shape != truth.shape:
        raise ValueError(f"label length mismatch: {pred.shape} vs {truth.shape}")
    pred_ids = {c: idx for idx, c in enumerate(np.unique(pred))}
    true_ids = {c: idx for idx, c in enumerate(np.unique(truth))}
    table = np.zeros((len(pred_ids), len(true_ids)), dtype=int)
    for p, t in zip(pred, truth):
        table[pred_ids[p], true_ids[t]] += 1
    rows, cols = linear_sum_assignment(-table)
    return float(table[rows, cols].sum()) / len(pred)
