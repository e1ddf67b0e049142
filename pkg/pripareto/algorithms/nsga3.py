# -*- coding: utf-8 -*-#
"""NSGA-III: non-dominated sorting with reference-point niching."""
from __future__ import annotations

from typing import Any, Dict, List, Optional

import numpy as np

from pripareto.algorithms.base import Algorithm, fill_by_fronts
from pripareto.algorithms.reference import (
    ReferencePointSet,
    associate,
    normalize,
    two_layer_reference_points,
)
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from pripareto.conceptual.variation import VariationConfig


def niching(
    k: int,
    niche_count: np.ndarray,
    reference: np.ndarray,
    distance: np.ndarray,
    rng: RandomStream,
) -> List[int]:
    """
    Pick k members of the last front, filling the least crowded reference points first.
    An empty niche takes its closest member, otherwise a random one.
    :param k: number of members to pick
    :param niche_count: members already attached to each reference point
    :param reference: reference point of every candidate
    :param distance: perpendicular distance of every candidate to its reference point
    :param rng: random stream
    :return: picked candidate indices
    """
    niche_count = np.array(niche_count, dtype=np.int64)
    available = np.ones(len(niche_count), dtype=bool)
    free = np.ones(len(reference), dtype=bool)
    picks: List[int] = []
    while len(picks) < k:
        counts = np.where(available, niche_count, np.iinfo(np.int64).max)
        least = np.flatnonzero(counts == counts.min())
        j = int(least[rng.integers(0, least.size)])
        members = np.flatnonzero(free & (reference == j))
        if members.size == 0:
            available[j] = False
            continue
        if niche_count[j] == 0:
            pick = int(members[np.argmin(distance[members])])
        else:
            pick = int(members[rng.integers(0, members.size)])
        picks.append(pick)
        free[pick] = False
        niche_count[j] += 1
    return picks


class Nsga3(Algorithm):
    name = "nsga3"

    def __init__(
        self,
        variation: Optional[VariationConfig] = None,
        outer_divisions: int = 2,
        inner_divisions: int = 2,
        inner_shrink: float = 0.5,
    ) -> None:
        super().__init__(variation)
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
        selected, last = fill_by_fronts(combined.F, self.popsize)
        if last is None:
            return combined.take(selected)
        candidates = selected + last
        reference, _, distance = associate(normalize(combined.F[candidates]), self.reference.points)
        niche_count = np.bincount(reference[: len(selected)], minlength=len(self.reference))
        picks = niching(
            self.popsize - len(selected),
            niche_count,
            reference[len(selected) :],
            distance[len(selected) :],
            rng,
        )
        return combined.take(selected + [last[p] for p in picks])

    def hyperparameters(self) -> Dict[str, Any]:
        return {
            "outer_divisions": self.outer_divisions,
            "inner_divisions": self.inner_divisions,
            "inner_shrink": self.inner_shrink,
        }
