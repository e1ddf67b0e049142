# -*- coding: utf-8 -*-#
"""Base class for the multi-objective evolutionary algorithms."""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple

import numpy as np

from pripareto.conceptual.dominance import crowding_distance, fast_nondominated_sort
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from pripareto.conceptual.variation import (
    VariationConfig,
    binary_tournament,
    polynomial_mutation,
    sbx_crossover,
)


class Algorithm(ABC):
    """
    An algorithm is an environmental selection (step) plus the keys its mating tournament uses.
    Variation is shared: binary tournament, SBX and polynomial mutation.
    """

    name: str = ""

    def __init__(self, variation: Optional[VariationConfig] = None) -> None:
        """
        Initialize the algorithm
        :param variation: variation settings
        """
        self.variation = variation or VariationConfig()
        self.n_objectives = 0
        self.popsize = 0

    def setup(self, n_objectives: int, popsize: int) -> None:
        """
        Prepare for a run, subclasses validate their settings here.
        :param n_objectives: number of objectives
        :param popsize: population size
        :raises ConfigurationError: settings incompatible with the run
        """
        self.n_objectives = n_objectives
        self.popsize = popsize

    def mating_keys(self, population: Population) -> Tuple[np.ndarray, np.ndarray]:
        """
        Tournament keys: rank (lower wins) and diversity (higher wins).
        :param population: current population
        :return: (rank, diversity)
        """
        n = len(population)
        return np.zeros(n), np.zeros(n)

    def reproduce(self, population: Population, n: int, rng: RandomStream) -> np.ndarray:
        """
        Create n offspring decision vectors.
        :param population: current population
        :param n: number of offspring
        :param rng: random stream
        :return: (n, D) decisions
        """
        rank, diversity = self.mating_keys(population)
        pairs = math.ceil(n / 2)
        parents = binary_tournament(rank, diversity, 2 * pairs, rng)
        children = []
        for a, b in zip(parents[0::2], parents[1::2]):
            c1, c2 = sbx_crossover(population.X[a], population.X[b], self.variation, rng)
            children.append(polynomial_mutation(c1, self.variation, rng))
            children.append(polynomial_mutation(c2, self.variation, rng))
        return np.array(children[:n])

    @abstractmethod
    def step(self, population: Population, offspring: Population, rng: RandomStream) -> Population:
        """
        Environmental selection over the parents and their offspring.
        :param population: current population
        :param offspring: evaluated offspring
        :param rng: random stream
        :return: next population of popsize individuals
        """
        pass

    def hyperparameters(self) -> Dict[str, Any]:
        return {}

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.hyperparameters()})"


def fill_by_fronts(F: np.ndarray, n: int) -> Tuple[list, Optional[list]]:
    """
    Take whole fronts while they fit.
    :param F: objective vectors
    :param n: number of individuals to keep
    :return: (selected indices, front that does not fit entirely or None)
    """
    selected: list = []
    for front in fast_nondominated_sort(F):
        if len(selected) + len(front) > n:
            return selected, front
        selected.extend(front)
        if len(selected) == n:
            break
    return selected, None


def rank_and_crowding(F: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Front number and within-front crowding distance of every point."""
    rank = np.zeros(len(F))
    crowding = np.zeros(len(F))
    for r, front in enumerate(fast_nondominated_sort(F)):
        rank[front] = r
        crowding[front] = crowding_distance(F[front])
    return rank, crowding
