# -*- coding: utf-8 -*-#
"""IBEA: indicator-based selection with the additive epsilon indicator."""
from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from pripareto.algorithms.base import Algorithm
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from pripareto.conceptual.variation import VariationConfig


def additive_epsilon(a, b) -> float:
    """Smallest ε such that a translated by -ε weakly dominates b."""
    return float(np.max(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)))


def unit_scale(F: np.ndarray) -> np.ndarray:
    """Map every objective to [0, 1], objectives without spread map to 0."""
    low, high = F.min(axis=0), F.max(axis=0)
    span = high - low
    return np.where(span > 0, (F - low) / np.where(span > 0, span, 1.0), 0.0)


def indicator_contributions(F: np.ndarray, kappa: float) -> np.ndarray:
    """
    Pairwise fitness contributions -exp(-I(i, j) / (c·κ)), zero on the diagonal.
    :param F: normalized objectives
    :param kappa: fitness scaling factor
    :return: (n, n) contributions of i to the fitness of j
    """
    indicator = np.max(F[:, None, :] - F[None, :, :], axis=2)
    c = np.max(np.abs(indicator))
    contributions = -np.exp(-indicator / ((c if c > 0 else 1.0) * kappa))
    np.fill_diagonal(contributions, 0.0)
    return contributions


def ibea_truncate(F: np.ndarray, keep: int, kappa: float) -> Tuple[List[int], np.ndarray]:
    """
    Remove the individual of lowest fitness one at a time, updating the others' fitness.
    :param F: normalized objectives
    :param keep: number of survivors
    :param kappa: fitness scaling factor
    :return: (survivor indices, fitness of every individual at the end)
    """
    contributions = indicator_contributions(F, kappa)
    fitness = contributions.sum(axis=0)
    alive = np.ones(len(F), dtype=bool)
    while alive.sum() > keep:
        worst = int(np.argmin(np.where(alive, fitness, np.inf)))
        alive[worst] = False
        fitness = fitness - contributions[worst]
    return np.flatnonzero(alive).tolist(), fitness


class Ibea(Algorithm):
    name = "ibea"

    def __init__(self, variation: Optional[VariationConfig] = None, kappa: float = 0.05) -> None:
        super().__init__(variation)
        if kappa <= 0:
            raise ConfigurationError(f"kappa must be strictly positive, got {kappa}")
        self.kappa = kappa

    def mating_keys(self, population: Population) -> Tuple[np.ndarray, np.ndarray]:
        fitness = indicator_contributions(unit_scale(population.F), self.kappa).sum(axis=0)
        return np.zeros(len(population)), fitness

    def step(self, population: Population, offspring: Population, rng: RandomStream) -> Population:
        combined = population.concat(offspring)
        survivors, _ = ibea_truncate(unit_scale(combined.F), self.popsize, self.kappa)
        return combined.take(survivors)

    def hyperparameters(self) -> Dict[str, Any]:
        return {"kappa": self.kappa}
