import math

import numpy as np
import pytest

from pripareto.conceptual.error import InvalidArgumentError
from pripareto.logical.archive import merge_best, nd_filter
from pripareto.logical.metrics import (
    ScalingBounds,
    compute_bounds,
    compute_metrics,
    contribution_counts,
    gd,
    igd,
    scale,
)
from tests.helpers import random_objectives, synthetic_point_set


def test_bounds_of_single_point():
    bounds = compute_bounds(np.array([[1.0, 2.0]]))
    assert bounds.bmin == bounds.bmax == (1.0, 2.0)
    assert scale(np.array([[1.0, 2.0]]), bounds).tolist() == [[0.0, 0.0]]


def test_bounds_validation():
    with pytest.raises(ValueError):
        ScalingBounds((1.0,), (0.0,))
    with pytest.raises(InvalidArgumentError):
        compute_bounds(np.empty((0, 3)))


def test_scale_maps_reference_onto_unit_cube():
    F = random_objectives(50)
    scaled = scale(F, compute_bounds(F))
    assert np.allclose(scaled.min(axis=0), 0.0)
    assert np.allclose(scaled.max(axis=0), 1.0)


def test_gd_of_subset_is_zero():
    B = random_objectives(30)
    assert gd(B[:10], B) == 0.0


def test_igd_example():
    assert igd(np.array([[0.0, 0.0]]), np.array([[0.0, 0.0], [1.0, 1.0]])) == pytest.approx(
        math.sqrt(2) / 2
    )


def test_igd_is_gd_swapped():
    generator = np.random.default_rng(0)
    P, B = generator.random((20, 9)), generator.random((40, 9))
    bounds = compute_bounds(B)
    assert igd(P, B, bounds) == gd(B, P, bounds)


def test_distance_of_empty_set():
    with pytest.raises(InvalidArgumentError):
        gd(np.empty((0, 2)), np.zeros((1, 2)))


def test_single_algorithm_contributes_everything():
    P = nd_filter(synthetic_point_set(random_objectives(200, seed=1)))
    B = merge_best([P])
    counts = contribution_counts({"only": P}, B)
    assert counts["only"].ratio == 1.0
    assert counts["only"].survivors == len(P)


def test_metrics_report():
    a = nd_filter(synthetic_point_set(random_objectives(200, seed=2), algo="a"))
    b = nd_filter(synthetic_point_set(random_objectives(200, seed=3), algo="b", offset=200))
    B = merge_best([a, b])
    report = compute_metrics({"a": a, "b": b}, B, samples=5000, seed=1)
    assert report.best.survivors == len(B)
    assert report.best.gd == 0.0 and report.best.igd == 0.0
    assert sum(column.survivors for column in report.algorithms) == len(B)
    for column in report.algorithms:
        assert all(ratio <= 1.0 for ratio in column.hypervolume_ratio)
        assert column.gd >= 0.0 and column.igd >= 0.0
    table = report.table()
    assert list(table.columns) == ["B", "a", "b"]
    assert table.loc["#P", "a"] == len(a)
    assert "HV_1.1/HV_1.1(B)" in table.index


def test_metrics_of_best_against_itself():
    B = nd_filter(synthetic_point_set(random_objectives(100, seed=4)))
    report = compute_metrics({"copy": B}, B, samples=5000, seed=2)
    column = report.algorithms[0]
    assert column.ratio == 1.0
    assert column.hypervolume == report.best.hypervolume
    assert column.gd == 0.0 and column.igd == 0.0


def test_best_set_name_is_reserved():
    B = nd_filter(synthetic_point_set(random_objectives(10, seed=5)))
    with pytest.raises(InvalidArgumentError):
        compute_metrics({"B": B}, B, samples=100)
