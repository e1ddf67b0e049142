# -*- coding: utf-8 -*-#
"""Hypervolume of scaled point sets: exact for few objectives, Monte Carlo otherwise."""
from __future__ import annotations

import logging
import math
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np
from pymoo.indicators.hv import HV  # type: ignore

from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.error import InvalidArgumentError, UnsupportedDimensionError
from pripareto.conceptual.support import RandomStream

MAX_EXACT_OBJECTIVES = 4
MAX_GROUPED_OBJECTIVES = 12
CHUNK_ELEMENTS = 1 << 22


def _below(points: np.ndarray, c: float) -> np.ndarray:
    points = np.atleast_2d(np.asarray(points, dtype=float))
    return points[np.all(points < c, axis=1)]


def hypervolume_exact(P: np.ndarray, c: float = 1.0) -> float:
    """
    Exact volume dominated by P up to c·(1, ..., 1).
    :param P: scaled points, (n, M)
    :param c: reference multiplier
    :return: volume
    :raises UnsupportedDimensionError: M above 4
    """
    P = np.atleast_2d(np.asarray(P, dtype=float))
    if P.shape[1] > MAX_EXACT_OBJECTIVES:
        raise UnsupportedDimensionError(P.shape[1], MAX_EXACT_OBJECTIVES)
    if c <= 0:
        raise InvalidArgumentError(f"reference multiplier must be positive, got {c}")
    inside = _below(P, c)
    if len(inside) == 0:
        return 0.0
    return float(HV(ref_point=np.full(P.shape[1], float(c)))(inside))


def _codes(values: np.ndarray, split: float) -> np.ndarray:
    return (values >= split).astype(np.int64) @ (1 << np.arange(values.shape[1], dtype=np.int64))


def dominated_mask(points: np.ndarray, samples: np.ndarray, split: float) -> np.ndarray:
    """
    Samples weakly dominated by at least one point. Samples are grouped by which side of `split` each
    coordinate falls on; a point below the split in a coordinate where the sample is above still qualifies,
    a point above it where the sample is below never does.
    :param points: (n, M)
    :param samples: (s, M)
    :param split: per-coordinate threshold of the grouping
    :return: boolean mask over samples
    """
    covered = np.zeros(len(samples), dtype=bool)
    if len(points) == 0 or len(samples) == 0:
        return covered
    m = samples.shape[1]
    if m <= MAX_GROUPED_OBJECTIVES:
        sample_codes = _codes(samples, split)
        point_codes = _codes(points, split)
    else:
        sample_codes = np.zeros(len(samples), dtype=np.int64)
        point_codes = np.zeros(len(points), dtype=np.int64)
    for code in np.unique(sample_codes):
        members = np.flatnonzero(sample_codes == code)
        candidates = points[(point_codes & ~code) == 0]
        if len(candidates) == 0:
            continue
        step = max(1, CHUNK_ELEMENTS // (len(members) * m))
        for start in range(0, len(candidates), step):
            open_ = members[~covered[members]]
            if open_.size == 0:
                break
            block = candidates[start : start + step]
            hit = np.any(np.all(block[None, :, :] <= samples[open_][:, None, :], axis=2), axis=1)
            covered[open_] = hit
    return covered


def _estimate(hits: int, samples: int, c: float, m: int) -> Tuple[float, float]:
    volume = c**m
    p = hits / samples
    return volume * p, volume * math.sqrt(p * (1.0 - p) / samples)


def hypervolume_mc(
    P: np.ndarray, c: float, samples: int, rng: RandomStream
) -> Tuple[float, float]:
    """
    Monte Carlo hypervolume with uniform samples in [0, c]^M.
    :param P: scaled points, (n, M)
    :param c: reference multiplier
    :param samples: number of samples
    :param rng: random stream
    :return: (estimate, standard error)
    """
    if c <= 0:
        raise InvalidArgumentError(f"reference multiplier must be positive, got {c}")
    if samples < 1:
        raise InvalidArgumentError("at least one sample required")
    P = np.atleast_2d(np.asarray(P, dtype=float))
    m = P.shape[1]
    P = _below(P, c)
    if len(P) == 0:
        return 0.0, 0.0
    draws = rng.uniform(0.0, c, size=(samples, m))
    return _estimate(int(dominated_mask(P, draws, c / 2.0).sum()), samples, c, m)


@instrument_class_function(name="hypervolume_batch", level=logging.INFO)
def hypervolume_batch(
    sets: Mapping[str, np.ndarray],
    best: np.ndarray,
    multipliers: Sequence[float],
    samples: int,
    seed: int,
) -> Tuple[Dict[float, Tuple[float, float]], Dict[float, Dict[str, Tuple[float, float]]]]:
    """
    Hypervolume of the best set and of every set on one shared sample set per multiplier. A set whose
    points are all weakly dominated by the best set is only tested on the samples the best set dominates,
    so its estimate never exceeds the best set's.
    :param sets: scaled point sets by name
    :param best: scaled best set
    :param multipliers: reference multipliers
    :param samples: samples per multiplier
    :param seed: seed of the sample set
    :return: ({c: best set estimate}, {c: {name: (estimate, standard error)}})
    """
    best = np.atleast_2d(np.asarray(best, dtype=float))
    m = best.shape[1]
    unit = RandomStream(seed).uniform(0.0, 1.0, size=(samples, m))
    best_results: Dict[float, Tuple[float, float]] = {}
    results: Dict[float, Dict[str, Tuple[float, float]]] = {}
    for c in multipliers:
        draws = unit * c
        best_below = _below(best, c)
        best_mask = dominated_mask(best_below, draws, c / 2.0)
        best_results[float(c)] = _estimate(int(best_mask.sum()), samples, c, m)
        row: Dict[str, Tuple[float, float]] = {}
        for name, points in sets.items():
            points = _below(np.atleast_2d(np.asarray(points, dtype=float)).reshape(-1, m), c)
            covered = np.all(dominated_mask(best, points, c / 2.0)) if len(points) else True
            if covered:
                mask = np.zeros(samples, dtype=bool)
                inside = np.flatnonzero(best_mask)
                mask[inside] = dominated_mask(points, draws[inside], c / 2.0)
            else:
                mask = dominated_mask(points, draws, c / 2.0)
            row[name] = _estimate(int(mask.sum()), samples, c, m)
        results[float(c)] = row
    return best_results, results
