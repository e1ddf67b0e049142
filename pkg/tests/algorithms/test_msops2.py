import numpy as np
import pytest

from pripareto.algorithms.msops2 import (
    TARGET_FLOOR,
    Msops2,
    aggregate_order,
    build_targets,
    minmax_scores,
    vads_scores,
)
from pripareto.conceptual.error import ConfigurationError


def test_targets_are_positive():
    targets = build_targets(9, 100)
    assert targets.shape == (100, 9)
    assert np.all(targets >= TARGET_FLOOR)


def test_too_many_targets():
    with pytest.raises(ConfigurationError):
        build_targets(3, 100)
    with pytest.raises(ConfigurationError):
        Msops2(target_count=0)


def test_minmax_scores():
    scores = minmax_scores(np.array([[1.0, 2.0]]), np.array([[0.5, 0.5], [1.0, 0.25]]))
    assert scores.tolist() == [[4.0, 8.0]]


def test_point_best_on_every_target_ranks_first():
    generator = np.random.default_rng(0)
    F = np.vstack([np.zeros(3), 0.1 + generator.random((30, 3))])
    targets = build_targets(3, 20)
    order = aggregate_order(minmax_scores(F, targets), vads_scores(F, targets, 100.0))
    assert order[0] == 0
    assert sorted(order.tolist()) == list(range(31))


def test_vads_prefers_aligned_vectors():
    targets = np.array([[1.0, 0.0]])
    scores = vads_scores(np.array([[1.0, 0.0], [1.0, 1.0]]), targets, 100.0)
    assert scores[0, 0] < scores[1, 0]


def test_order_covers_population():
    algorithm = Msops2(target_count=20)
    algorithm.setup(3, 5)
    generator = np.random.default_rng(1)
    F = generator.random((10, 3))
    assert len(algorithm.order(F)) == 10
