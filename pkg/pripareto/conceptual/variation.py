# -*- coding: utf-8 -*-#
"""Real-coded variation: simulated binary crossover, polynomial mutation and tournament mating."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from pripareto.conceptual.error import InvalidArgumentError
from pripareto.conceptual.support import RandomStream


@dataclass(frozen=True)
class VariationConfig:
    """
    Variation settings, defaults are the customary ones of comparative MOEA studies.
    pm_prob None means 1/D.
    """

    sbx_eta: float = 20.0
    sbx_prob: float = 1.0
    pm_eta: float = 20.0
    pm_prob: Optional[float] = None
    lower: float = 500.0
    upper: float = 1500.0

    def __post_init__(self) -> None:
        if self.sbx_eta <= 0 or self.pm_eta <= 0:
            raise ValueError("distribution indices must be strictly positive")
        if not 0.0 <= self.sbx_prob <= 1.0:
            raise ValueError(f"sbx_prob {self.sbx_prob} outside [0, 1]")
        if self.pm_prob is not None and not 0.0 <= self.pm_prob <= 1.0:
            raise ValueError(f"pm_prob {self.pm_prob} outside [0, 1]")
        if not self.lower < self.upper:
            raise ValueError("lower bound must be below upper bound")

    def mutation_probability(self, dimension: int) -> float:
        return self.pm_prob if self.pm_prob is not None else 1.0 / dimension


def sbx_spread(p1: np.ndarray, p2: np.ndarray, u: np.ndarray, eta: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Unbounded simulated binary crossover for given uniform draws, children are symmetric around the
    parents' mean.
    """
    beta = np.where(
        u <= 0.5,
        np.power(2.0 * u, 1.0 / (eta + 1.0)),
        np.power(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0)),
    )
    mean = (p1 + p2) / 2.0
    half = (p1 - p2) / 2.0
    return mean + beta * half, mean - beta * half


def sbx_crossover(
    p1: np.ndarray, p2: np.ndarray, cfg: VariationConfig, rng: RandomStream
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Simulated binary crossover of two parents, children clipped to the bounds.
    :param p1: parent decision vector
    :param p2: parent decision vector
    :param cfg: variation settings
    :param rng: random stream
    :return: two children
    """
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if p1.shape != p2.shape:
        raise InvalidArgumentError(f"parents of shape {p1.shape} and {p2.shape}")
    if rng.random() >= cfg.sbx_prob:
        return p1.copy(), p2.copy()
    u = rng.random(p1.size)
    # u == 1 would divide by zero
    u = np.minimum(u, 1.0 - 1e-12)
    c1, c2 = sbx_spread(p1, p2, u, cfg.sbx_eta)
    return np.clip(c1, cfg.lower, cfg.upper), np.clip(c2, cfg.lower, cfg.upper)


def polynomial_mutation(p: np.ndarray, cfg: VariationConfig, rng: RandomStream) -> np.ndarray:
    """
    Bounded polynomial mutation, each variable mutates with the configured probability.
    :param p: decision vector within bounds
    :param cfg: variation settings
    :param rng: random stream
    :return: mutated copy
    """
    p = np.asarray(p, dtype=float)
    mutate = rng.random(p.size) < cfg.mutation_probability(p.size)
    u = rng.random(p.size)
    span = cfg.upper - cfg.lower
    power = 1.0 / (cfg.pm_eta + 1.0)
    below = 1.0 - (p - cfg.lower) / span
    above = 1.0 - (cfg.upper - p) / span
    left = np.power(2.0 * u + (1.0 - 2.0 * u) * np.power(below, cfg.pm_eta + 1.0), power) - 1.0
    right = 1.0 - np.power(
        2.0 * (1.0 - u) + 2.0 * (u - 0.5) * np.power(above, cfg.pm_eta + 1.0), power
    )
    delta = np.where(u < 0.5, left, right)
    child = np.where(mutate, p + delta * span, p)
    return np.clip(child, cfg.lower, cfg.upper)


def binary_tournament(
    rank: np.ndarray, diversity: np.ndarray, n: int, rng: RandomStream
) -> np.ndarray:
    """
    Binary tournament: lower rank wins, then higher diversity score, then a coin flip.
    :param rank: rank per individual, lower is better
    :param diversity: secondary score per individual, higher is better
    :param n: number of winners
    :param rng: random stream
    :return: indices of the winners
    """
    size = len(rank)
    a = rng.integers(0, size, n)
    b = rng.integers(0, size, n)
    coin = rng.random(n) < 0.5
    a_wins = (rank[a] < rank[b]) | (
        (rank[a] == rank[b])
        & ((diversity[a] > diversity[b]) | ((diversity[a] == diversity[b]) & coin))
    )
    return np.where(a_wins, a, b)
