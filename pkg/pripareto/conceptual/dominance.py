# -*- coding: utf-8 -*-#
"""Pareto dominance, non-dominated sorting and crowding distance (minimization)."""
from __future__ import annotations

from typing import List

import networkx as nx  # type: ignore
import numpy as np

from pripareto.conceptual.error import InvalidArgumentError


def dominates(a, b) -> bool:
    """
    Pareto dominance: no objective worse and at least one strictly better.
    :param a: objective vector
    :param b: objective vector
    :return: True if a dominates b
    :raises InvalidArgumentError: length mismatch
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise InvalidArgumentError(f"objective vectors of shape {a.shape} and {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def dominance_matrix(F: np.ndarray) -> np.ndarray:
    """
    Pairwise dominance.
    :param F: (n, M) objective vectors
    :return: (n, n) boolean matrix, [i, j] is True when i dominates j
    """
    F = np.asarray(F, dtype=float)
    weakly = np.all(F[:, None, :] <= F[None, :, :], axis=2)
    strictly = np.any(F[:, None, :] < F[None, :, :], axis=2)
    return weakly & strictly


def fast_nondominated_sort(F: np.ndarray) -> List[List[int]]:
    """
    Partition points into successive non-dominated fronts.
    The dominance relation is a DAG, the fronts are its topological generations.
    :param F: (n, M) objective vectors
    :return: fronts as sorted index lists, front 0 is the non-dominated set
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    n = F.shape[0]
    if n == 0:
        return []
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    sources, targets = np.nonzero(dominance_matrix(F))
    graph.add_edges_from(zip(sources.tolist(), targets.tolist()))
    return [sorted(generation) for generation in nx.topological_generations(graph)]


def nondominated_ranks(F: np.ndarray) -> np.ndarray:
    """Front number of every point."""
    ranks = np.zeros(len(F), dtype=np.int64)
    for rank, front in enumerate(fast_nondominated_sort(F)):
        ranks[front] = rank
    return ranks


def crowding_distance(F: np.ndarray) -> np.ndarray:
    """
    Crowding distance of the points of one front. Boundary points per objective are infinitely far,
    an objective without spread adds nothing to interior points. Ties keep input order.
    :param F: (n, M) objective vectors of a front
    :return: distance per point
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    n, m = F.shape
    if n <= 2:
        return np.full(n, np.inf)
    distance = np.zeros(n)
    for k in range(m):
        order = np.argsort(F[:, k], kind="stable")
        values = F[order, k]
        distance[order[0]] = np.inf
        distance[order[-1]] = np.inf
        spread = values[-1] - values[0]
        if spread <= 0:
            continue
        distance[order[1:-1]] += (values[2:] - values[:-2]) / spread
    return distance
