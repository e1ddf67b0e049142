# -*- coding: utf-8 -*-#
"""MSOPS-II: ranking against many target vectors with weighted min-max and VADS aggregation."""
from __future__ import annotations

from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.stats import rankdata  # type: ignore

from pripareto.algorithms.base import Algorithm
from pripareto.algorithms.ibea import unit_scale
from pripareto.algorithms.reference import two_layer_reference_points
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from pripareto.conceptual.variation import VariationConfig

TARGET_FLOOR = 1e-4


def build_targets(n_objectives: int, count: int) -> np.ndarray:
    """
    Spread targets: half taken evenly from the layered lattice, the rest their normalized reciprocals.
    :param n_objectives: M
    :param count: number of targets
    :return: (count, M) strictly positive targets
    """
    base = two_layer_reference_points(n_objectives).points
    half = (count + 1) // 2
    if half > len(base):
        raise ConfigurationError(f"{count} targets exceed twice the {len(base)} lattice points")
    chosen = base[np.round(np.linspace(0, len(base) - 1, half)).astype(int)]
    reciprocal = 1.0 / (chosen + 1e-3)
    reciprocal /= reciprocal.sum(axis=1)[:, None]
    targets = np.vstack([chosen, reciprocal])[:count]
    return np.maximum(targets, TARGET_FLOOR)


def minmax_scores(F: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Weighted min-max max_k f_k / t_k, (n, T)."""
    return np.max(F[:, None, :] / targets[None, :, :], axis=2)


def vads_scores(F: np.ndarray, targets: np.ndarray, exponent: float) -> np.ndarray:
    """Vector angle distance scaling ||f|| / cos^q, in log form, (n, T)."""
    norms = np.linalg.norm(F, axis=1)
    units = targets / np.linalg.norm(targets, axis=1)[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        cosine = (F @ units.T) / norms[:, None]
        cosine = np.clip(np.nan_to_num(cosine, nan=1.0), 1e-300, 1.0)
        return np.log(norms)[:, None] - exponent * np.log(cosine)


def aggregate_order(minmax: np.ndarray, vads: np.ndarray) -> np.ndarray:
    """
    Order individuals by their sorted per-target min-max ranks, lexicographically, VADS ranks breaking ties.
    :param minmax: (n, T) scores
    :param vads: (n, T) scores
    :return: indices, best first
    """
    minmax_ranks = np.sort(rankdata(minmax, method="min", axis=0), axis=1)
    vads_ranks = np.sort(rankdata(vads, method="min", axis=0), axis=1)
    keys = np.concatenate([minmax_ranks, vads_ranks], axis=1)
    return np.lexsort(keys[:, ::-1].T)


class Msops2(Algorithm):
    name = "msops2"

    def __init__(
        self,
        variation: Optional[VariationConfig] = None,
        target_count: int = 100,
        vads_exponent: float = 100.0,
    ) -> None:
        super().__init__(variation)
        if target_count < 1:
            raise ConfigurationError(f"target count must be positive, got {target_count}")
        self.target_count = target_count
        self.vads_exponent = vads_exponent
        self.targets: Optional[np.ndarray] = None

    def setup(self, n_objectives: int, popsize: int) -> None:
        super().setup(n_objectives, popsize)
        self.targets = build_targets(n_objectives, self.target_count)

    def order(self, F: np.ndarray) -> np.ndarray:
        normalized = unit_scale(F)
        return aggregate_order(
            minmax_scores(normalized, self.targets),
            vads_scores(normalized, self.targets, self.vads_exponent),
        )

    def mating_keys(self, population: Population) -> Tuple[np.ndarray, np.ndarray]:
        position = np.empty(len(population))
        position[self.order(population.F)] = np.arange(len(population))
        return position, np.zeros(len(population))

    def step(self, population: Population, offspring: Population, rng: RandomStream) -> Population:
        combined = population.concat(offspring)
        return combined.take(self.order(combined.F)[: self.popsize])

    def hyperparameters(self) -> Dict[str, Any]:
        return {"target_count": self.target_count, "vads_exponent": self.vads_exponent}
