# -*- coding: utf-8 -*-#
"""GrEA: grid-based selection with grid ranking, crowding and coordinate point distance."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from pripareto.algorithms.base import Algorithm, fill_by_fronts
from pripareto.conceptual.dominance import nondominated_ranks
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from pripareto.conceptual.variation import VariationConfig


@dataclass(frozen=True)
class GridSpec:
    """Adaptive hyperbox grid spanning a point set with half a cell of margin on each side."""

    lower: np.ndarray
    width: np.ndarray
    divisions: int

    @classmethod
    def spanning(cls, F: np.ndarray, divisions: int) -> GridSpec:
        low, high = F.min(axis=0), F.max(axis=0)
        margin = (high - low) / (2.0 * divisions)
        lower = low - margin
        return cls(lower, (high + margin - lower) / divisions, divisions)

    def coordinates(self, F: np.ndarray) -> np.ndarray:
        """Grid cell per point, an objective without spread maps to cell 0."""
        safe = np.where(self.width > 0, self.width, 1.0)
        cells = np.where(self.width > 0, np.floor((F - self.lower) / safe), 0.0)
        return np.clip(cells, 0, self.divisions - 1).astype(np.int64)

    def point_distance(self, F: np.ndarray, cells: np.ndarray) -> np.ndarray:
        """Normalized distance of every point to the lower corner of its cell."""
        safe = np.where(self.width > 0, self.width, 1.0)
        offsets = np.where(self.width > 0, (F - (self.lower + cells * self.width)) / safe, 0.0)
        return np.sqrt(np.sum(offsets**2, axis=1))


def grid_distance(cells: np.ndarray) -> np.ndarray:
    """Pairwise L1 distance between grid cells."""
    return np.abs(cells[:, None, :] - cells[None, :, :]).sum(axis=2)


def grid_dominance(cells: np.ndarray) -> np.ndarray:
    """[i, j] is True when the cell of i dominates the cell of j."""
    weakly = np.all(cells[:, None, :] <= cells[None, :, :], axis=2)
    strictly = np.any(cells[:, None, :] < cells[None, :, :], axis=2)
    return weakly & strictly


def grid_crowding(cells: np.ndarray) -> np.ndarray:
    """Sum of M - GD over the grid neighbours (GD < M) of every point."""
    m = cells.shape[1]
    distance = grid_distance(cells)
    closeness = np.where(distance < m, m - distance, 0)
    np.fill_diagonal(closeness, 0)
    return closeness.sum(axis=1)


def grid_selection(F: np.ndarray, k: int, divisions: int) -> List[int]:
    """
    Iteratively pick k points of a front by (GR, GCD, GCPD), penalizing the neighbourhood of every pick.
    :param F: (n, M) objectives of the front
    :param k: number of points to pick
    :param divisions: grid divisions per objective
    :return: picked indices in pick order
    """
    m = F.shape[1]
    grid = GridSpec.spanning(F, divisions)
    cells = grid.coordinates(F)
    rank = cells.sum(axis=1).astype(float)
    crowding = np.zeros(len(F))
    cpd = grid.point_distance(F, cells)
    distance = grid_distance(cells)
    dominated_by = grid_dominance(cells)
    free = np.ones(len(F), dtype=bool)
    picks: List[int] = []
    for _ in range(k):
        candidates = np.flatnonzero(free)
        q = int(candidates[np.lexsort((cpd[candidates], crowding[candidates], rank[candidates]))[0]])
        picks.append(q)
        free[q] = False
        neighbours = free & (distance[q] < m)
        crowding[neighbours] += m - distance[q][neighbours]
        equal = free & (distance[q] == 0)
        dominated = free & dominated_by[q] & ~equal
        rank[equal] += m + 2
        rank[dominated] += m
        others = free & ~equal & ~dominated
        penalty = np.zeros(len(F))
        for p in np.flatnonzero(others & (distance[q] < m)):
            if penalty[p] < m - distance[q, p]:
                penalty[p] = m - distance[q, p]
                below = others & dominated_by[p]
                penalty[below] = np.maximum(penalty[below], penalty[p])
        rank[others] += penalty[others]
    return picks


class Grea(Algorithm):
    name = "grea"

    def __init__(self, variation: Optional[VariationConfig] = None, divisions: int = 10) -> None:
        super().__init__(variation)
        if divisions < 2:
            raise ConfigurationError(f"grid divisions must be at least 2, got {divisions}")
        self.divisions = divisions

    def mating_keys(self, population: Population) -> Tuple[np.ndarray, np.ndarray]:
        cells = GridSpec.spanning(population.F, self.divisions).coordinates(population.F)
        return nondominated_ranks(population.F).astype(float), -grid_crowding(cells).astype(float)

    def step(self, population: Population, offspring: Population, rng: RandomStream) -> Population:
        combined = population.concat(offspring)
        selected, last = fill_by_fronts(combined.F, self.popsize)
        if last is not None:
            picks = grid_selection(combined.F[last], self.popsize - len(selected), self.divisions)
            selected.extend(last[p] for p in picks)
        return combined.take(selected)

    def hyperparameters(self) -> Dict[str, Any]:
        return {"divisions": self.divisions}
