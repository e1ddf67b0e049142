# -*- coding: utf-8 -*-#
"""θ-DEA: Pareto pre-selection followed by θ-dominance sorting within reference clusters."""
from __future__ import annotations

from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.stats import rankdata  # type: ignore

from pripareto.algorithms.base import Algorithm
from pripareto.algorithms.reference import (
    ReferencePointSet,
    associate,
    normalize,
    two_layer_reference_points,
)
from pripareto.conceptual.dominance import fast_nondominated_sort
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from pripareto.conceptual.variation import VariationConfig


def theta_dominates(cluster_a: int, fitness_a: float, cluster_b: int, fitness_b: float) -> bool:
    """θ-dominance only orders members of the same cluster."""
    return cluster_a == cluster_b and fitness_a < fitness_b


def theta_ranks(
    normalized: np.ndarray, directions: np.ndarray, theta: float
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Cluster points to their nearest direction and rank them within the cluster by d1 + θ·d2, equal
    fitness shares a rank.
    :param normalized: normalized objectives
    :param directions: reference directions
    :param theta: penalty on the distance to the direction
    :return: (cluster, fitness, θ-front number) per point
    """
    cluster, d1, d2 = associate(normalized, directions)
    fitness = d1 + theta * d2
    rank = np.zeros(len(fitness), dtype=np.int64)
    for j in np.unique(cluster):
        members = np.flatnonzero(cluster == j)
        rank[members] = rankdata(fitness[members], method="dense").astype(np.int64) - 1
    return cluster, fitness, rank


class ThetaDea(Algorithm):
    name = "theta-dea"

    def __init__(
        self,
        variation: Optional[VariationConfig] = None,
        theta: float = 5.0,
        outer_divisions: int = 2,
        inner_divisions: int = 2,
        inner_shrink: float = 0.5,
    ) -> None:
        super().__init__(variation)
        if theta < 0:
            raise ConfigurationError(f"theta must be non-negative, got {theta}")
        self.theta = theta
        self.outer_divisions = outer_divisions
        self.inner_divisions = inner_divisions
        self.inner_shrink = inner_shrink
        self.reference: Optional[ReferencePointSet] = None

    def setup(self, n_objectives: int, popsize: int) -> None:
        super().setup(n_objectives, popsize)
        self.reference = two_layer_reference_points(
            n_objectives, self.outer_divisions, self.inner_divisions, self.inner_shrink
        )
        if len(self.reference) > popsize:
            raise ConfigurationError(
                f"{len(self.reference)} reference points exceed population size {popsize}"
            )

    def step(self, population: Population, offspring: Population, rng: RandomStream) -> Population:
        combined = population.concat(offspring)
        candidates: list = []
        for front in fast_nondominated_sort(combined.F):
            candidates.extend(front)
            if len(candidates) >= self.popsize:
                break
        candidates = np.asarray(candidates)
        if candidates.size == self.popsize:
            return combined.take(candidates)
        _, _, rank = theta_ranks(
            normalize(combined.F[candidates]), self.reference.points, self.theta
        )
        selected: list = []
        for level in range(int(rank.max()) + 1):
            members = candidates[rank == level]
            need = self.popsize - len(selected)
            if members.size <= need:
                selected.extend(members.tolist())
            else:
                chosen = rng.choice(members.size, need, replace=False)
                selected.extend(members[np.sort(chosen)].tolist())
            if len(selected) == self.popsize:
                break
        return combined.take(selected)

    def hyperparameters(self) -> Dict[str, Any]:
        return {
            "theta": self.theta,
            "outer_divisions": self.outer_divisions,
            "inner_divisions": self.inner_divisions,
            "inner_shrink": self.inner_shrink,
        }
