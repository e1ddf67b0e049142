# -*- coding: utf-8 -*-#
"""Blind ranges (eclipsing) and blind velocities (mainbeam clutter notch)."""
from __future__ import annotations

import math
from enum import Enum, auto
from typing import List, Sequence, Tuple

import numpy as np

from pripareto.conceptual.error import InvalidArgumentError
from pripareto.physical.ambiguity import folded_distance
from pripareto.physical.radar import DEFAULT_EVALUATION, EvaluationConfig, RadarParams


class Domain(Enum):
    """Measurement domains of the model."""

    Range = auto()
    Velocity = auto()


def eclipse_window(pri: np.ndarray | float, params: RadarParams) -> Tuple[np.ndarray, np.ndarray]:
    """
    Blind range before and after each fold position: one compressed pulsewidth ahead of the pulse,
    transmission plus receiver recovery behind it.
    :param pri: PRI in seconds
    :param params: radar characteristics
    :return: (range ahead of the fold, range behind the fold) in meters
    """
    pri = np.asarray(pri, dtype=float)
    ahead = params.speed_of_light * params.compressed_pulsewidth / 2.0 * np.ones_like(pri)
    behind = params.speed_of_light * (params.duty_cycle * pri + params.recovery_time) / 2.0
    return ahead, behind


def notch_half_width(unambiguous_velocity, notch_bins: float, params: RadarParams):
    """Half width of the mainbeam clutter notch in m/s."""
    return notch_bins * np.asarray(unambiguous_velocity, dtype=float) / params.fft_size


def merge_intervals(intervals: Sequence[Tuple[float, float]]) -> List[Tuple[float, float]]:
    merged: List[Tuple[float, float]] = []
    for lo, hi in sorted(intervals):
        if hi < lo:
            continue
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def blind_intervals(
    pri: float,
    n: int,
    domain: Domain,
    params: RadarParams,
    config: EvaluationConfig = DEFAULT_EVALUATION,
) -> List[Tuple[float, float]]:
    """
    Blind zones of a single PRF over the instrumented domain.
    :param pri: PRI in seconds
    :param n: 1-indexed PRF position (selects the carrier)
    :param domain: Domain.Range or Domain.Velocity
    :param params: radar characteristics
    :param config: evaluation granularity (notch width)
    :return: sorted, disjoint (lo, hi) intervals in meters or m/s
    """
    if pri <= 0:
        raise InvalidArgumentError("pri must be strictly positive")
    if domain is Domain.Range:
        fold = params.speed_of_light * pri / 2.0
        ahead, behind = (float(v) for v in eclipse_window(pri, params))
        intervals = []
        k = 0
        while k * fold - ahead <= params.max_range:
            lo, hi = max(0.0, k * fold - ahead), min(params.max_range, k * fold + behind)
            intervals.append((lo, hi))
            k += 1
        return merge_intervals(intervals)
    fold = params.speed_of_light / params.carrier(n) / (2.0 * pri)
    half = float(notch_half_width(fold, config.notch_bins, params))
    limit = params.max_velocity
    intervals = [
        (max(-limit, k * fold - half), min(limit, k * fold + half))
        for k in range(math.ceil((-limit - half) / fold), math.floor((limit + half) / fold) + 1)
    ]
    return merge_intervals(intervals)


def range_clearance(ranges: np.ndarray, pri: np.ndarray, params: RadarParams) -> np.ndarray:
    """
    Distance from each range cell's fold position to the nearest eclipse boundary, per PRF.
    :param ranges: cell ranges in meters
    :param pri: PRIs in seconds
    :param params: radar characteristics
    :return: (cells, PRFs) clearances, 0 inside an eclipse
    """
    fold = params.speed_of_light * pri / 2.0
    ahead, behind = eclipse_window(pri, params)
    folded = np.mod(np.asarray(ranges, dtype=float)[:, None], fold[None, :])
    clearance = np.minimum(folded - behind[None, :], (fold - ahead)[None, :] - folded)
    return np.maximum(clearance, 0.0)


def velocity_clearance(
    velocities: np.ndarray, unambiguous_velocity: np.ndarray, notch_bins: float, params: RadarParams
) -> np.ndarray:
    """
    Distance from each velocity cell's fold position to the nearest clutter notch edge, per PRF.
    :param velocities: cell velocities in m/s
    :param unambiguous_velocity: V_u per PRF
    :param notch_bins: notch half width in FFT bins
    :param params: radar characteristics
    :return: (cells, PRFs) clearances, 0 inside a notch
    """
    half = notch_half_width(unambiguous_velocity, notch_bins, params)
    folded = folded_distance(
        np.asarray(velocities, dtype=float)[:, None], 0.0, unambiguous_velocity[None, :]
    )
    return np.maximum(folded - half[None, :], 0.0)


def blindness_tolerance(clearances: Sequence[float] | np.ndarray, coincidence: int = 3) -> float:
    """
    Growth of a clutter patch a cell tolerates before fewer than `coincidence` PRFs see it.
    :param clearances: clearance per PRF
    :param coincidence: number of PRFs required for a detection
    :return: the coincidence-th largest clearance
    """
    values = np.asarray(clearances, dtype=float)
    if values.ndim != 1 or values.size < coincidence:
        raise InvalidArgumentError(f"at least {coincidence} clearances required")
    return float(blindness_profile(values[None, :], coincidence)[0])


def blindness_profile(clearances: np.ndarray, coincidence: int = 3) -> np.ndarray:
    """Row-wise coincidence-th largest clearance of a (cells, PRFs) matrix."""
    return -np.partition(-clearances, coincidence - 1, axis=1)[:, coincidence - 1]
