import os

import numpy as np
import pytest

from pripareto.physical.model import (
    N_OBJECTIVES,
    ObjectiveVector,
    RadarProblem,
    evaluate,
    is_realistic,
    model_config_hash,
)
from pripareto.physical.radar import EvaluationConfig, RadarParams
from tests.helpers import X_A, X_S

PERMUTATION_INVARIANT = (0, 2, 4, 6)


def test_reference_vectors_are_realistic():
    for x in (X_S, X_A):
        v = evaluate(x)
        assert len(v.margins) == 8
        assert all(m >= 0 for m in v.margins)
        assert v.dwell < 50


def test_evaluate_is_deterministic():
    assert evaluate(X_S) == evaluate(X_S)


def test_small_perturbation_changes_nothing():
    assert evaluate(X_S) == evaluate(np.array(X_S) + 0.04)


def test_permutation_invariance():
    generator = np.random.default_rng(4)
    for _ in range(20):
        x = generator.integers(500, 1501, size=10)
        a, b = evaluate(x), evaluate(generator.permutation(x))
        assert a.dwell == b.dwell
        for i in PERMUTATION_INVARIANT:
            assert a.margins[i] == b.margins[i]


def test_median_bounded_below_by_minimum():
    generator = np.random.default_rng(5)
    for _ in range(30):
        v = evaluate(generator.uniform(500, 1500, size=generator.integers(4, 13)))
        for i in range(4):
            assert v.margins[i + 4] <= v.margins[i]


@pytest.mark.desk_scale
@pytest.mark.skipif(os.getenv("DESK_SCALE") != "1", reason="set DESK_SCALE=1 to run")
def test_model_invariants_on_thousand_vectors():
    generator = np.random.default_rng(6)
    for _ in range(1000):
        x = generator.integers(500, 1501, size=10)
        a, b = evaluate(x), evaluate(generator.permutation(x))
        assert a.dwell == b.dwell
        for i in PERMUTATION_INVARIANT:
            assert a.margins[i] == b.margins[i]
        for i in range(4):
            assert a.margins[i + 4] <= a.margins[i]


def test_equal_pris_cannot_decode():
    v = evaluate([700] * 6)
    assert v.margins[0] == 0
    assert v.margins[4] == 0


def test_is_realistic_dwell_boundary():
    margins = (1.0,) * 8
    assert is_realistic(ObjectiveVector(margins, 49.999))
    assert not is_realistic(ObjectiveVector(margins, 50.0))
    assert not is_realistic(ObjectiveVector((0.0,) + (1.0,) * 7, 40.0))


def test_objective_vector_minimization():
    v = ObjectiveVector(tuple(float(i) for i in range(8)), 42.0)
    f = v.minimization
    assert len(f) == N_OBJECTIVES
    assert f[1] == -1.0 and f[-1] == 42.0
    assert ObjectiveVector.from_minimization(f) == v


def test_objective_vector_validation():
    with pytest.raises(ValueError):
        ObjectiveVector((1.0,) * 7, 40.0)
    with pytest.raises(ValueError):
        ObjectiveVector((1.0,) * 8, 0.0)


def test_config_hash_tracks_configuration():
    assert model_config_hash() == model_config_hash(RadarParams(), EvaluationConfig())
    assert model_config_hash() != model_config_hash(RadarParams(fft_size=32))
    assert model_config_hash() != model_config_hash(config=EvaluationConfig(notch_bins=2.0))


def test_radar_problem_bounds():
    problem = RadarProblem(8)
    assert problem.n_objectives == N_OBJECTIVES
    assert problem.lower.tolist() == [500.0] * 8
    assert problem.upper.tolist() == [1500.0] * 8
    assert problem.evaluate(X_S) == evaluate(X_S)
