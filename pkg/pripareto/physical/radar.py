# -*- coding: utf-8 -*-#
"""Radar characteristics and PRI vectors.

All physical quantities are SI (seconds, meters, Hz, m/s) unless the name says otherwise. PRIs are carried on
the quantization grid as integer 'ticks' of `pri_quantum` (0.1 us by default), so a PRI of 51 us is 510 ticks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.constants import c as SPEED_OF_LIGHT  # type: ignore

from pripareto.conceptual.error import InvalidArgumentError, InvalidDimensionError

MIN_DIMENSION = 4
MAX_DIMENSION = 12


@dataclass(frozen=True)
class RadarParams:
    """Characteristics of the radar model, defaults reproduce the reference medium PRF radar."""

    base_carrier: float = 10e9
    carrier_step: float = 30e6
    pri_min: float = 50e-6
    pri_max: float = 150e-6
    pri_quantum: float = 0.1e-6
    compressed_pulsewidth: float = 0.5e-6
    recovery_time: float = 1.0e-6
    range_resolution: float = 75.0
    fft_size: int = 64
    duty_cycle: float = 0.10
    max_dwell: float = 50e-3
    max_velocity: float = 1500.0
    max_range: float = 185_200.0
    coincidence: int = 3
    speed_of_light: float = field(default=SPEED_OF_LIGHT)

    def __post_init__(self) -> None:
        if not self.pri_min < self.pri_max:
            raise ValueError(f"pri_min {self.pri_min} must be below pri_max {self.pri_max}")
        for name in (
            "base_carrier",
            "pri_min",
            "pri_quantum",
            "compressed_pulsewidth",
            "recovery_time",
            "range_resolution",
            "max_dwell",
            "max_velocity",
            "max_range",
            "speed_of_light",
        ):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.carrier_step < 0:
            raise ValueError("carrier_step must not be negative")
        if not 0 < self.duty_cycle < 1:
            raise ValueError(f"duty_cycle {self.duty_cycle} outside (0, 1)")
        if self.coincidence < 2:
            raise ValueError(f"coincidence {self.coincidence} must be at least 2")
        if self.fft_size < 1:
            raise ValueError("fft_size must be at least 1")
        if self.carrier(MAX_DIMENSION) <= 0:
            raise ValueError("carrier frequency hops below zero")

    @property
    def lower_ticks(self) -> int:
        return int(round(self.pri_min / self.pri_quantum))

    @property
    def upper_ticks(self) -> int:
        return int(round(self.pri_max / self.pri_quantum))

    @property
    def round_trip_time(self) -> float:
        """Time for an echo to come back from maximum range (space charging)."""
        return 2.0 * self.max_range / self.speed_of_light

    def carrier(self, n: int) -> float:
        """
        Carrier frequency of the n-th PRF (1-indexed), the radar hops down by carrier_step per PRF.
        :param n: 1-indexed PRF position
        :return: frequency in Hz
        """
        return self.base_carrier - n * self.carrier_step

    def wavelengths(self, dimension: int) -> np.ndarray:
        n = np.arange(1, dimension + 1, dtype=float)
        return self.speed_of_light / (self.base_carrier - n * self.carrier_step)


DEFAULT_RADAR = RadarParams()


@dataclass(frozen=True)
class PriVector:
    """Quantized PRI vector, entries are integer ticks of the PRI quantum."""

    ticks: Tuple[int, ...]
    pri_quantum: float = DEFAULT_RADAR.pri_quantum

    def __post_init__(self) -> None:
        if not MIN_DIMENSION <= len(self.ticks) <= MAX_DIMENSION:
            raise InvalidDimensionError(len(self.ticks), MIN_DIMENSION, MAX_DIMENSION)
        if any(int(t) != t or t <= 0 for t in self.ticks):
            raise InvalidArgumentError(f"PRI ticks must be positive integers: {self.ticks}")

    @property
    def dimension(self) -> int:
        return len(self.ticks)

    @property
    def seconds(self) -> np.ndarray:
        return np.asarray(self.ticks, dtype=float) * self.pri_quantum

    def __len__(self) -> int:
        return len(self.ticks)

    def __iter__(self):
        return iter(self.ticks)

    def __repr__(self) -> str:
        return f"PriVector({list(self.ticks)})"


def quantize(x: Sequence[float] | np.ndarray, params: RadarParams = DEFAULT_RADAR) -> PriVector:
    """
    Round a real vector given in PRI ticks onto the quantization grid and clamp it to the PRI bounds.
    Ties round half up.
    :param x: D reals in tick units (e.g. [500, 1500] for the default radar)
    :param params: radar characteristics
    :return: PriVector
    :raises InvalidDimensionError: D outside [4, 12]
    :raises InvalidArgumentError: non-finite entries
    """
    if isinstance(x, PriVector):
        x = x.ticks
    values = np.asarray(x, dtype=float)
    if values.ndim != 1:
        raise InvalidArgumentError(f"expected a flat vector, got shape {values.shape}")
    if not MIN_DIMENSION <= values.size <= MAX_DIMENSION:
        raise InvalidDimensionError(values.size, MIN_DIMENSION, MAX_DIMENSION)
    if not np.all(np.isfinite(values)):
        raise InvalidArgumentError("PRI vector contains non-finite entries")
    ticks = np.clip(np.floor(values + 0.5), params.lower_ticks, params.upper_ticks)
    return PriVector(tuple(int(t) for t in ticks), params.pri_quantum)


def fold_moduli(x: PriVector, params: RadarParams = DEFAULT_RADAR) -> Tuple[np.ndarray, np.ndarray]:
    """
    Unambiguous range and velocity per PRF. The n-th PRF transmits at base_carrier - n * carrier_step.
    :param x: quantized PRI vector
    :param params: radar characteristics
    :return: (R_u in meters, V_u in m/s), one entry per PRF
    """
    pri = x.seconds
    unambiguous_range = params.speed_of_light * pri / 2.0
    unambiguous_velocity = params.wavelengths(x.dimension) / (2.0 * pri)
    return unambiguous_range, unambiguous_velocity


def pulses_per_burst(x: PriVector, params: RadarParams = DEFAULT_RADAR) -> np.ndarray:
    """FFT pulses plus the space charging pulses, rounded up to whole PRIs."""
    pri = x.seconds
    return params.fft_size + np.ceil(params.round_trip_time / pri)


def dwell_time(x: PriVector, params: RadarParams = DEFAULT_RADAR) -> float:
    """
    Total time on target over all bursts.
    :param x: quantized PRI vector
    :param params: radar characteristics
    :return: dwell in seconds
    """
    # fsum keeps the result independent of PRI order
    return math.fsum((pulses_per_burst(x, params) * x.seconds).tolist())


@dataclass(frozen=True)
class EvaluationConfig:
    """
    Granularity of the objective evaluation.
    :param range_cell_stride: decimation of the range-resolution grid for the true target cells
    :param velocity_grid_step: velocity cell size in m/s
    :param notch_bins: mainbeam clutter notch half width in FFT bins
    :param target_extent_cells: cells around the true target that are not ghost candidates
    :param tolerance_cap: optional (range, velocity) cap on decodability, default half the smallest fold
    :param min_range: start of the instrumented range, default just past the longest eclipse
    :param min_velocity: smallest instrumented absolute velocity, the mainbeam clutter region is excluded
    """

    range_cell_stride: int = 10
    velocity_grid_step: float = 5.0
    notch_bins: float = 3.0
    target_extent_cells: int = 1
    tolerance_cap: Optional[Tuple[float, float]] = None
    min_range: Optional[float] = None
    min_velocity: float = 15.0

    def __post_init__(self) -> None:
        if self.range_cell_stride < 1:
            raise ValueError("range_cell_stride must be at least 1")
        if self.velocity_grid_step <= 0 or self.notch_bins <= 0:
            raise ValueError("velocity_grid_step and notch_bins must be strictly positive")
        if self.target_extent_cells < 1:
            raise ValueError("target_extent_cells must be at least 1")
        if self.tolerance_cap is not None:
            if len(self.tolerance_cap) != 2 or min(self.tolerance_cap) <= 0:
                raise ValueError("tolerance_cap must be a positive (range, velocity) pair")
            object.__setattr__(self, "tolerance_cap", tuple(float(v) for v in self.tolerance_cap))
        if self.min_range is not None and self.min_range < 0:
            raise ValueError("min_range must not be negative")
        if self.min_velocity < 0:
            raise ValueError("min_velocity must not be negative")

    def first_range(self, params: RadarParams) -> float:
        """Start of the instrumented range in meters."""
        if self.min_range is not None:
            return self.min_range
        longest_eclipse = (
            params.duty_cycle * params.pri_max + params.recovery_time + params.compressed_pulsewidth
        )
        return params.speed_of_light * longest_eclipse / 2.0


DEFAULT_EVALUATION = EvaluationConfig()
