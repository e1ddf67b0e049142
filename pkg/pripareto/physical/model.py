# -*- coding: utf-8 -*-#
"""Nine-objective evaluation of a PRI vector.

Eight tolerances are maximized (median and minimum over the instrumented cells of the range and velocity
decodability and blindness tolerances) and the dwell time is minimized. The optimizers work on the
minimization view f = (-m1, ..., -m8, dwell).
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from hashlib import sha256
from typing import Sequence, Tuple

import numpy as np

from pripareto.physical.ambiguity import decodability_profile
from pripareto.physical.blindness import (
    blindness_profile,
    range_clearance,
    velocity_clearance,
)
from pripareto.physical.radar import (
    DEFAULT_EVALUATION,
    DEFAULT_RADAR,
    EvaluationConfig,
    PriVector,
    RadarParams,
    dwell_time,
    fold_moduli,
    quantize,
)

N_OBJECTIVES = 9
N_MARGINS = 8
OBJECTIVE_NAMES = (
    "median range decodability",
    "median velocity decodability",
    "median range blindness",
    "median velocity blindness",
    "minimum range decodability",
    "minimum velocity decodability",
    "minimum range blindness",
    "minimum velocity blindness",
    "dwell time",
)


@dataclass(frozen=True)
class ObjectiveVector:
    """
    Raw objective values: eight tolerances (meters for range, m/s for velocity) and the dwell in ms.
    """

    margins: Tuple[float, ...]
    dwell: float

    def __post_init__(self) -> None:
        if len(self.margins) != N_MARGINS:
            raise ValueError(f"expected {N_MARGINS} margins, got {len(self.margins)}")
        if not self.dwell > 0:
            raise ValueError(f"dwell must be strictly positive, got {self.dwell}")
        object.__setattr__(self, "margins", tuple(float(m) for m in self.margins))

    @property
    def minimization(self) -> np.ndarray:
        """Objective vector to minimize, margins negated."""
        return np.array([-m for m in self.margins] + [self.dwell])

    @classmethod
    def from_minimization(cls, f: Sequence[float]) -> ObjectiveVector:
        if len(f) != N_OBJECTIVES:
            raise ValueError(f"expected {N_OBJECTIVES} objectives, got {len(f)}")
        return cls(tuple(-float(v) for v in f[:N_MARGINS]), float(f[N_MARGINS]))


@dataclass(frozen=True)
class _Grids:
    range_cells: int
    range_true: np.ndarray
    velocity_cells: int
    velocity_values: np.ndarray
    velocity_true: np.ndarray


@lru_cache(maxsize=16)
def _grids(params: RadarParams, config: EvaluationConfig) -> _Grids:
    resolution = params.range_resolution
    range_cells = int(math.floor(params.max_range / resolution + 1e-9)) + 1
    first = int(math.ceil(config.first_range(params) / resolution - 1e-9))
    range_true = np.arange(first, range_cells, config.range_cell_stride)
    step = config.velocity_grid_step
    velocity_cells = int(math.floor(2.0 * params.max_velocity / step + 1e-9)) + 1
    velocity_values = -params.max_velocity + step * np.arange(velocity_cells)
    velocity_true = np.flatnonzero(np.abs(velocity_values) >= config.min_velocity)
    if range_true.size == 0 or velocity_true.size == 0:
        raise ValueError("evaluation grid has no instrumented cell")
    return _Grids(range_cells, range_true, velocity_cells, velocity_values, velocity_true)


def evaluate(
    x: PriVector | Sequence[float],
    params: RadarParams = DEFAULT_RADAR,
    config: EvaluationConfig = DEFAULT_EVALUATION,
) -> ObjectiveVector:
    """
    Evaluate a PRI vector. Pure: the quantized vector and the configurations fully determine the result.
    :param x: PRI vector, quantized on the fly when given as reals in tick units
    :param params: radar characteristics
    :param config: evaluation granularity
    :return: ObjectiveVector
    """
    x = quantize(x, params)
    grids = _grids(params, config)
    pri = x.seconds
    unambiguous_range, unambiguous_velocity = fold_moduli(x, params)
    range_cap, velocity_cap = config.tolerance_cap or (
        unambiguous_range.min() / 2.0,
        unambiguous_velocity.min() / 2.0,
    )
    k = params.coincidence
    range_decodability = decodability_profile(
        unambiguous_range,
        grids.range_cells,
        params.range_resolution,
        config.target_extent_cells,
        range_cap,
        k,
    )[grids.range_true]
    velocity_decodability = decodability_profile(
        unambiguous_velocity,
        grids.velocity_cells,
        config.velocity_grid_step,
        config.target_extent_cells,
        velocity_cap,
        k,
    )[grids.velocity_true]
    range_blindness = blindness_profile(
        range_clearance(grids.range_true * params.range_resolution, pri, params), k
    )
    velocity_blindness = blindness_profile(
        velocity_clearance(
            grids.velocity_values[grids.velocity_true],
            unambiguous_velocity,
            config.notch_bins,
            params,
        ),
        k,
    )
    cells = (range_decodability, velocity_decodability, range_blindness, velocity_blindness)
    margins = tuple(float(np.median(v)) for v in cells) + tuple(float(v.min()) for v in cells)
    return ObjectiveVector(margins, dwell_time(x, params) * 1e3)


def is_realistic(v: ObjectiveVector, params: RadarParams = DEFAULT_RADAR) -> bool:
    """
    Realistic solutions have every tolerance positive and stay within the dwell budget.
    :param v: objective values
    :param params: radar characteristics
    :return: bool
    """
    return all(m > 0 for m in v.margins) and v.dwell < params.max_dwell * 1e3


def model_config_hash(
    params: RadarParams = DEFAULT_RADAR, config: EvaluationConfig = DEFAULT_EVALUATION
) -> str:
    """
    Fingerprint of a model configuration, objective values are only comparable under equal hashes.
    :param params: radar characteristics
    :param config: evaluation granularity
    :return: hex digest
    """
    document = {"radar": asdict(params), "evaluation": asdict(config)}
    return sha256(json.dumps(document, sort_keys=True).encode("utf-8")).hexdigest()


class RadarProblem:
    """Black-box problem over [pri_min, pri_max]^D in tick units, inputs are quantized implicitly."""

    n_objectives = N_OBJECTIVES

    def __init__(
        self,
        dimension: int,
        params: RadarParams = DEFAULT_RADAR,
        config: EvaluationConfig = DEFAULT_EVALUATION,
    ) -> None:
        """
        Initialize the problem
        :param dimension: number of PRIs
        :param params: radar characteristics
        :param config: evaluation granularity
        """
        quantize([params.lower_ticks] * dimension, params)
        self.dimension = dimension
        self.params = params
        self.config = config
        self.lower = np.full(dimension, float(params.lower_ticks))
        self.upper = np.full(dimension, float(params.upper_ticks))
        self.config_hash = model_config_hash(params, config)

    def evaluate(self, decision: Sequence[float] | np.ndarray) -> ObjectiveVector:
        return evaluate(decision, self.params, self.config)

    def __repr__(self) -> str:
        return f"RadarProblem(D={self.dimension}, hash={self.config_hash[:12]})"
