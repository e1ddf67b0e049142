import numpy as np
import pytest

from pripareto.conceptual.error import InvalidArgumentError
from pripareto.physical.blindness import (
    Domain,
    blind_intervals,
    blindness_profile,
    blindness_tolerance,
    merge_intervals,
    range_clearance,
    velocity_clearance,
)
from pripareto.physical.radar import DEFAULT_RADAR
from tests.helpers import scan_blindness


def test_blindness_tolerance_examples():
    assert blindness_tolerance(list(range(1, 11))) == 8
    assert blindness_tolerance([5, 2, 9, 7]) == 5
    assert blindness_tolerance([5, 0, 0, 0]) == 0


def test_blindness_tolerance_requires_three_entries():
    with pytest.raises(InvalidArgumentError):
        blindness_tolerance([1.0, 2.0])


def test_blindness_tolerance_matches_scan():
    generator = np.random.default_rng(2)
    for _ in range(200):
        clearances = generator.integers(0, 20, size=generator.integers(3, 12)).astype(float).tolist()
        assert blindness_tolerance(clearances) == scan_blindness(clearances)


def test_blindness_profile_row_wise():
    matrix = np.array([[1.0, 2.0, 3.0, 4.0], [9.0, 0.0, 0.0, 5.0]])
    assert blindness_profile(matrix).tolist() == [2.0, 0.0]


def test_range_eclipse_width():
    intervals = blind_intervals(100e-6, 1, Domain.Range, DEFAULT_RADAR)
    fold = DEFAULT_RADAR.speed_of_light * 100e-6 / 2
    assert fold == pytest.approx(14990, abs=1)
    lo, hi = intervals[1]
    assert hi - lo == pytest.approx(1724, abs=1)
    assert lo < fold < hi


def test_range_intervals_are_sorted_and_disjoint():
    intervals = blind_intervals(73.4e-6, 2, Domain.Range, DEFAULT_RADAR)
    assert intervals[0][0] == 0.0
    for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
        assert hi < lo
    assert intervals[-1][1] <= DEFAULT_RADAR.max_range


def test_velocity_notch_width():
    intervals = blind_intervals(50e-6, 1, Domain.Velocity, DEFAULT_RADAR)
    centre = [iv for iv in intervals if iv[0] < 0 < iv[1]][0]
    assert centre[1] == pytest.approx(14.1, abs=0.05)
    assert centre[0] == pytest.approx(-14.1, abs=0.05)
    assert intervals[0][0] >= -DEFAULT_RADAR.max_velocity
    assert intervals[-1][1] <= DEFAULT_RADAR.max_velocity


def test_merge_intervals():
    assert merge_intervals([(5, 6), (0, 2), (1, 3), (7, 6)]) == [(0, 3), (5, 6)]


def test_range_clearance_zero_inside_eclipse():
    pri = np.array([100e-6])
    fold = DEFAULT_RADAR.speed_of_light * 100e-6 / 2
    clearance = range_clearance(np.array([fold + 100.0, fold + 5000.0]), pri, DEFAULT_RADAR)
    assert clearance[0, 0] == 0
    assert clearance[1, 0] > 0


def test_velocity_clearance_zero_inside_notch():
    unambiguous_velocity = np.array([300.0])
    clearance = velocity_clearance(np.array([301.0, 150.0]), unambiguous_velocity, 3.0, DEFAULT_RADAR)
    assert clearance[0, 0] == 0
    assert clearance[1, 0] == pytest.approx(150.0 - 3.0 * 300.0 / 64)
