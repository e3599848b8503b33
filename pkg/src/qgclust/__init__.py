"""Clustering by iterated entangled 2x2 quantum games on a knn network."""

from .clustering import ClusterResult, accuracy, merge_to_k, strongest_link_partition
from .data_io import Dataset, RunConfig, impute_missing, load_builtin, load_csv, standardize
from .dynamics import ConvergenceConfig, IterationState, LrrKind, Trajectory, run, step
from .game import PairPayoffContext, PayoffKind, PayoffMatrixSpec, StrategyCase
from .network import DistanceConfig, PlayerGraph, build_knn, distance, init_strengths
from .pipeline import best_over_k, run_clustering, run_dynamics

__all__ = [
    "ClusterResult",
    "ConvergenceConfig",
    "Dataset",
    "DistanceConfig",
    "IterationState",
    "LrrKind",
    "PairPayoffContext",
    "PayoffKind",
    "PayoffMatrixSpec",
    "PlayerGraph",
    "RunConfig",
    "StrategyCase",
    "Trajectory",
    "accuracy",
    "best_over_k",
    "build_knn",
    "distance",
    "impute_missing",
    "init_strengths",
    "load_builtin",
    "load_csv",
    "merge_to_k",
    "run",
    "run_clustering",
    "run_dynamics",
    "standardize",
    "step",
    "strongest_link_partition",
]
