# -*- coding: utf-8 -*-#
"""NSGA-II: non-dominated sorting with crowding-distance truncation."""
from __future__ import annotations

from typing import Tuple

import numpy as np

from pripareto.algorithms.base import Algorithm, fill_by_fronts, rank_and_crowding
from pripareto.conceptual.dominance import crowding_distance
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream


class Nsga2(Algorithm):
    name = "nsga2"

    def mating_keys(self, population: Population) -> Tuple[np.ndarray, np.ndarray]:
        return rank_and_crowding(population.F)

    def step(self, population: Population, offspring: Population, rng: RandomStream) -> Population:
        combined = population.concat(offspring)
        selected, last = fill_by_fronts(combined.F, self.popsize)
        if last is not None:
            distance = crowding_distance(combined.F[last])
            order = np.argsort(-distance, kind="stable")
            selected.extend(np.asarray(last)[order[: self.popsize - len(selected)]].tolist())
        return combined.take(selected)
