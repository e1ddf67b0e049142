# -*- coding: utf-8 -*-#
"""Individuals and populations handled by the generational loop."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, List, Optional, Sequence

import numpy as np


@dataclass(frozen=True)
class Individual:
    """
    An evaluated point of the search space.
    decision is the real vector as produced by variation (before quantization), objectives holds the raw
    objective values, f the minimization view.
    """

    decision: np.ndarray
    f: np.ndarray
    eval_index: int
    objectives: Optional[Any] = None


class Population:
    """Column-oriented population: decision matrix, minimization objective matrix, evaluation indices."""

    def __init__(
        self,
        decisions: np.ndarray,
        objectives: np.ndarray,
        eval_indices: Optional[Sequence[int]] = None,
        vectors: Optional[Sequence[Any]] = None,
    ) -> None:
        """
        Initialize the population
        :param decisions: (n, D) decision vectors
        :param objectives: (n, M) objective values to minimize
        :param eval_indices: evaluation sequence number per individual, defaults to 0..n-1
        :param vectors: optional raw objective values per individual
        """
        self.X = np.atleast_2d(np.asarray(decisions, dtype=float))
        self.F = np.atleast_2d(np.asarray(objectives, dtype=float))
        if self.X.shape[0] != self.F.shape[0]:
            raise ValueError(f"{self.X.shape[0]} decisions for {self.F.shape[0]} objective vectors")
        self.eval_index = (
            np.arange(self.F.shape[0])
            if eval_indices is None
            else np.asarray(eval_indices, dtype=np.int64)
        )
        self.vectors: List[Any] = list(vectors) if vectors is not None else [None] * len(self)

    @classmethod
    def from_individuals(cls, individuals: Sequence[Individual]) -> Population:
        return cls(
            np.array([i.decision for i in individuals]),
            np.array([i.f for i in individuals]),
            [i.eval_index for i in individuals],
            [i.objectives for i in individuals],
        )

    def concat(self, other: Population) -> Population:
        return Population(
            np.vstack([self.X, other.X]),
            np.vstack([self.F, other.F]),
            np.concatenate([self.eval_index, other.eval_index]),
            self.vectors + other.vectors,
        )

    def take(self, indices: Sequence[int] | np.ndarray) -> Population:
        indices = np.asarray(indices, dtype=np.int64)
        return Population(
            self.X[indices],
            self.F[indices],
            self.eval_index[indices],
            [self.vectors[i] for i in indices],
        )

    def individuals(self) -> Iterator[Individual]:
        for i in range(len(self)):
            yield Individual(self.X[i], self.F[i], int(self.eval_index[i]), self.vectors[i])

    @property
    def n_objectives(self) -> int:
        return self.F.shape[1]

    def __len__(self) -> int:
        return self.F.shape[0]

    def __repr__(self) -> str:
        return f"Population(n={len(self)}, M={self.n_objectives})"
