import numpy as np
import pytest

from pripareto.conceptual.error import InvalidArgumentError, InvalidDimensionError
from pripareto.physical.radar import (
    DEFAULT_RADAR,
    EvaluationConfig,
    PriVector,
    RadarParams,
    dwell_time,
    fold_moduli,
    quantize,
)
from tests.helpers import X_A, X_S


def test_quantize_rounds_half_up():
    x = quantize([749.49, 749.5, 1500.3, 600.0])
    assert x.ticks == (749, 750, 1500, 600)


def test_quantize_clamps_to_pri_bounds():
    x = quantize([10.0, 499.6, 2000.0, 1499.4])
    assert x.ticks == (500, 500, 1500, 1499)


def test_quantize_is_idempotent():
    x = quantize([512.2, 733.7, 901.5, 1200.0, 1333.3])
    assert quantize(x) == x


def test_quantize_rejects_bad_dimension():
    with pytest.raises(InvalidDimensionError):
        quantize([600.0] * 3)
    with pytest.raises(InvalidDimensionError):
        quantize([600.0] * 13)


def test_quantize_rejects_non_finite():
    with pytest.raises(InvalidArgumentError):
        quantize([600.0, np.nan, 700.0, 800.0])


def test_pri_vector_validation():
    with pytest.raises(InvalidArgumentError):
        PriVector((500, 600, 700, 0))
    assert PriVector((500, 600, 700, 800)).seconds[0] == pytest.approx(50e-6)


def test_unambiguous_range():
    unambiguous_range, _ = fold_moduli(quantize([500] * 4))
    assert unambiguous_range[0] == pytest.approx(7494.8, abs=0.1)


def test_unambiguous_velocity_decreases_with_pri():
    _, short = fold_moduli(quantize([500] * 4))
    _, long = fold_moduli(quantize([1500] * 4))
    assert short[0] == pytest.approx(300.7, abs=0.1)
    assert long[0] == pytest.approx(100.2, abs=0.1)
    assert np.all(long < short)


def test_carrier_hops_down():
    assert DEFAULT_RADAR.carrier(1) == pytest.approx(9.97e9)
    wavelengths = DEFAULT_RADAR.wavelengths(4)
    assert np.all(np.diff(wavelengths) > 0)


def test_dwell_of_reference_vectors():
    assert dwell_time(quantize(X_S)) * 1e3 == pytest.approx(46.521, abs=1e-3)
    assert dwell_time(quantize(X_A)) * 1e3 == pytest.approx(45.418, abs=1e-3)
    assert dwell_time(quantize([500] * 10)) * 1e3 == pytest.approx(44.5, abs=1e-9)


def test_dwell_bounds():
    generator = np.random.default_rng(3)
    fft = DEFAULT_RADAR.fft_size
    trip = DEFAULT_RADAR.round_trip_time
    for _ in range(50):
        x = quantize(generator.uniform(500, 1500, size=generator.integers(4, 13)))
        pri = x.seconds
        dwell = dwell_time(x)
        assert fft * pri.sum() + len(x) * trip <= dwell + 1e-12
        assert dwell <= fft * pri.sum() + len(x) * (trip + pri.max()) + 1e-12


def test_dwell_is_order_independent():
    assert dwell_time(quantize(X_S)) == dwell_time(quantize(list(reversed(X_S))))


def test_radar_params_validation():
    with pytest.raises(ValueError):
        RadarParams(pri_min=150e-6, pri_max=50e-6)
    with pytest.raises(ValueError):
        RadarParams(duty_cycle=1.5)
    with pytest.raises(ValueError):
        RadarParams(coincidence=1)


def test_evaluation_config_validation():
    with pytest.raises(ValueError):
        EvaluationConfig(range_cell_stride=0)
    with pytest.raises(ValueError):
        EvaluationConfig(tolerance_cap=(1.0, -1.0))
    assert EvaluationConfig(min_range=100.0).first_range(DEFAULT_RADAR) == 100.0
    assert EvaluationConfig().first_range(DEFAULT_RADAR) == pytest.approx(2473.3, abs=0.1)
