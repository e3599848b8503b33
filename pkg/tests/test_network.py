import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qgclust.network import DistanceConfig, build_knn, distance, init_strengths


def test_distance_identical_points():
    assert distance([1.0, 2.0], [1.0, 2.0]) == 1.0


def test_distance_substitution():
    assert distance([0.0], [2.0]) == pytest.approx(math.e, abs=1e-12)
    assert distance([0.0], [8.0], DistanceConfig(sigma=2.0)) == pytest.approx(math.e, abs=1e-12)


def test_distance_dimension_mismatch():
    with pytest.raises(ValueError):
        distance([1.0], [1.0, 2.0])


def test_sigma_must_be_positive():
    with pytest.raises(ValueError):
        DistanceConfig(sigma=0.0)


@given(st.lists(st.floats(-50, 50), min_size=1, max_size=5),
       st.lists(st.floats(-50, 50), min_size=1, max_size=5))
def test_distance_floor_and_symmetry(a, b):
    if len(a) != len(b):
        b = (b * len(a))[: len(a)]
    d = distance(a, b)
    assert d >= 1.0
    assert 0.0 < 1.0 / d <= 1.0
    assert d == pytest.approx(distance(b, a), rel=1e-12)


def test_knn_collinear_points():
    pts = np.array([[0.0], [1.0], [10.0]])
    g = build_knn(pts, k=2)
    assert g.neighbor_sets[0] == [0, 1]
    assert g.neighbor_sets[1] == [0, 1]
    assert g.neighbor_sets[2] == [1, 2]


def test_knn_k1_is_self_only():
    pts = np.random.default_rng(0).normal(size=(6, 3))
    g = build_knn(pts, k=1)
    assert g.neighbor_sets == [[i] for i in range(6)]


def test_knn_duplicate_points_deterministic():
    pts = np.array([[0.0], [0.0], [5.0], [5.0]])
    g1 = build_knn(pts, k=2)
    g2 = build_knn(pts, k=2)
    assert g1.neighbor_sets == g2.neighbor_sets
    # ties broken by lowest index
    assert g1.neighbor_sets[0] == [0, 1]
    assert g1.neighbor_sets[1] == [0, 1]


def test_knn_k_domain():
    pts = np.zeros((3, 2))
    with pytest.raises(ValueError):
        build_knn(pts, k=3)
    with pytest.raises(ValueError):
        build_knn(pts, k=0)


def test_self_membership():
    pts = np.random.default_rng(1).normal(size=(20, 2))
    g = build_knn(pts, k=5)
    for i in range(20):
        assert i in g.neighbor_sets[i]


def test_init_strengths_uniform():
    pts = np.random.default_rng(2).normal(size=(10, 2))
    g = init_strengths(build_knn(pts, k=4))
    for s in g.strengths:
        assert all(v == 0.25 for v in s.values())
        assert sum(s.values()) == pytest.approx(1.0, abs=1e-12)


def test_init_strengths_k1():
    g = init_strengths(build_knn(np.array([[0.0], [3.0]]), k=1))
    assert g.strengths[0] == {0: 1.0}


def test_init_strengths_iris_sums():
    from sklearn.datasets import load_iris

    g = init_strengths(build_knn(load_iris().data, k=10))
    for s in g.strengths:
        assert sum(s.values()) == pytest.approx(1.0, abs=1e-12)


def test_in_degree_fresh_k1():
    g = build_knn(np.array([[0.0], [4.0], [9.0]]), k=1)
    assert list(g.in_degrees()) == [1, 1, 1]


def test_in_degree_mutual_pair():
    from qgclust.network import PlayerGraph

    g = PlayerGraph(n=2, k=2, distances=np.ones((2, 2)),
                    neighbor_sets=[[0, 1], [0, 1]],
                    strengths=[{0: 0.5, 1: 0.5}, {0: 0.5, 1: 0.5}])
    assert list(g.in_degrees()) == [2, 2]


def test_in_degree_double_counting():
    pts = np.random.default_rng(3).normal(size=(15, 3))
    g = build_knn(pts, k=6)
    assert g.in_degrees().sum() == sum(len(nbrs) for nbrs in g.neighbor_sets)


def test_absent_edge_strength_is_zero():
    g = init_strengths(build_knn(np.array([[0.0], [1.0], [10.0]]), k=2))
    assert g.strength(0, 2) == 0.0
