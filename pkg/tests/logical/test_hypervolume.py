import numpy as np
import pytest

from pripareto.conceptual.error import InvalidArgumentError, UnsupportedDimensionError
from pripareto.conceptual.support import RandomStream
from pripareto.logical.hypervolume import (
    dominated_mask,
    hypervolume_batch,
    hypervolume_exact,
    hypervolume_mc,
)


def test_exact_two_points():
    assert hypervolume_exact(np.array([[0.25, 0.75], [0.75, 0.25]])) == pytest.approx(0.3125)


def test_exact_single_point_is_product():
    point = np.array([[0.2, 0.5, 0.9]])
    assert hypervolume_exact(point) == pytest.approx(0.8 * 0.5 * 0.1)
    assert hypervolume_exact(point, 1.1) == pytest.approx(0.9 * 0.6 * 0.2)


def test_exact_ignores_dominated_and_outside_points():
    base = np.array([[0.25, 0.75], [0.75, 0.25]])
    extended = np.vstack([base, [[0.8, 0.8]], [[1.2, 0.0]]])
    assert hypervolume_exact(extended) == pytest.approx(hypervolume_exact(base))


def test_exact_three_boxes_inclusion_exclusion():
    P = np.array([[0.2, 0.6, 0.4], [0.6, 0.2, 0.4], [0.4, 0.4, 0.1]])
    boxes = 1.0 - P
    volume = 0.0
    for mask in range(1, 8):
        members = [i for i in range(3) if mask >> i & 1]
        overlap = np.prod(boxes[members].min(axis=0))
        volume += overlap if len(members) % 2 else -overlap
    assert hypervolume_exact(P) == pytest.approx(volume)


def test_exact_empty_when_nothing_below_reference():
    assert hypervolume_exact(np.array([[1.0, 0.5], [0.5, 1.2]])) == 0.0


def test_exact_rejects_many_objectives():
    with pytest.raises(UnsupportedDimensionError):
        hypervolume_exact(np.zeros((1, 5)))
    with pytest.raises(InvalidArgumentError):
        hypervolume_exact(np.zeros((1, 2)), 0.0)


def test_monte_carlo_origin_covers_everything():
    estimate, error = hypervolume_mc(np.zeros((1, 9)), 1.0, 10_000, RandomStream(0))
    assert estimate == 1.0
    assert error == 0.0


def test_monte_carlo_corner_point():
    inside = 0
    for seed in range(100):
        estimate, error = hypervolume_mc(np.full((1, 9), 0.5), 1.0, 20_000, RandomStream(seed))
        if abs(estimate - 0.5**9) <= 3 * max(error, 1e-12):
            inside += 1
    assert inside >= 98


def test_monte_carlo_matches_exact():
    generator = np.random.default_rng(1)
    inside = 0
    for seed in range(20):
        P = generator.random((5, 3))
        estimate, error = hypervolume_mc(P, 1.0, 200_000, RandomStream(seed))
        if abs(estimate - hypervolume_exact(P)) <= 3 * error:
            inside += 1
    assert inside >= 19


def test_dominated_mask_matches_direct_check():
    generator = np.random.default_rng(2)
    points = generator.random((20, 9))
    samples = generator.random((2000, 9))
    expected = np.any(np.all(points[None, :, :] <= samples[:, None, :], axis=2), axis=1)
    assert np.array_equal(dominated_mask(points, samples, 0.5), expected)


def test_batch_subset_never_exceeds_best():
    generator = np.random.default_rng(3)
    best = generator.random((40, 4))
    subset = best[:10]
    best_result, result = hypervolume_batch({"subset": subset}, best, (0.9, 1.0, 1.1), 20_000, 4)
    for c in (0.9, 1.0, 1.1):
        assert result[c]["subset"][0] <= best_result[c][0]


def test_batch_is_deterministic():
    best = np.random.default_rng(5).random((10, 3))
    first = hypervolume_batch({"a": best[:3]}, best, (1.0,), 5000, 7)
    second = hypervolume_batch({"a": best[:3]}, best, (1.0,), 5000, 7)
    assert first == second
