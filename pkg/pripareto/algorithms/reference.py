# -*- coding: utf-8 -*-#
"""Reference directions on the unit simplex and objective normalization."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from pymoo.util.ref_dirs import get_reference_directions  # type: ignore
from scipy.special import comb  # type: ignore

from pripareto.conceptual.error import ConfigurationError, InvalidArgumentError


@dataclass(frozen=True)
class ReferencePointSet:
    """
    Reference points on the unit simplex, every point has non-negative coordinates summing to 1.
    layers lists (divisions, shrink) of every layer in the order the points are stacked.
    """

    points: np.ndarray
    layers: Tuple[Tuple[int, float], ...]

    def __post_init__(self) -> None:
        if np.any(self.points < -1e-12) or not np.allclose(self.points.sum(axis=1), 1.0, atol=1e-12):
            raise InvalidArgumentError("reference points must lie on the unit simplex")

    def __len__(self) -> int:
        return self.points.shape[0]


def das_dennis(n_objectives: int, divisions: int) -> np.ndarray:
    """
    Systematic simplex lattice: all vectors with coordinates in {0, 1/H, ..., 1} summing to 1.
    :param n_objectives: M
    :param divisions: H
    :return: (C(H+M-1, M-1), M) points
    """
    if n_objectives < 2:
        raise ConfigurationError(f"a reference lattice needs at least 2 objectives, got {n_objectives}")
    if divisions < 1:
        raise ConfigurationError(f"lattice divisions must be positive, got {divisions}")
    return np.asarray(
        get_reference_directions("das-dennis", n_objectives, n_partitions=divisions), dtype=float
    )


def lattice_size(n_objectives: int, divisions: int) -> int:
    """Number of lattice points, C(H + M - 1, M - 1)."""
    return int(comb(divisions + n_objectives - 1, n_objectives - 1, exact=True))


def layered_reference_points(
    n_objectives: int, layers: Sequence[Tuple[int, float]]
) -> ReferencePointSet:
    """
    Stack lattices, each shrunk towards the simplex centroid: (1 - s) / M + s * w.
    :param n_objectives: M
    :param layers: (divisions, shrink) per layer, shrink in (0, 1]
    :return: ReferencePointSet
    """
    stacked = []
    for divisions, shrink in layers:
        if not 0.0 < shrink <= 1.0:
            raise ConfigurationError(f"layer shrink {shrink} outside (0, 1]")
        lattice = das_dennis(n_objectives, divisions)
        stacked.append((1.0 - shrink) / n_objectives + shrink * lattice)
    return ReferencePointSet(np.vstack(stacked), tuple((int(h), float(s)) for h, s in layers))


def two_layer_reference_points(
    n_objectives: int, outer: int = 2, inner: int = 2, shrink: float = 0.5
) -> ReferencePointSet:
    """Boundary lattice plus a shrunk inner lattice, customary for many objectives."""
    layers = [(outer, 1.0)]
    if inner > 0:
        layers.append((inner, shrink))
    return layered_reference_points(n_objectives, layers)


def extreme_points(translated: np.ndarray) -> np.ndarray:
    """
    Per objective, the point minimizing the achievement scalarizing function along that axis.
    :param translated: objectives with the ideal point subtracted
    :return: (M, M) extreme points
    """
    m = translated.shape[1]
    weights = np.full((m, m), 1e-6) + np.eye(m) * (1.0 - 1e-6)
    asf = np.max(translated[:, None, :] / weights[None, :, :], axis=2)
    return translated[np.argmin(asf, axis=0)]


def intercepts(translated: np.ndarray) -> np.ndarray:
    """
    Axis intercepts of the hyperplane through the extreme points; the per-objective maximum when the
    hyperplane is degenerate. Zero-width objectives get 1.
    :param translated: objectives with the ideal point subtracted
    :return: (M,) intercepts
    """
    fallback = translated.max(axis=0)
    try:
        b = np.linalg.solve(extreme_points(translated), np.ones(translated.shape[1]))
        with np.errstate(divide="ignore"):
            result = 1.0 / b
        if not np.all(np.isfinite(result)) or np.any(result <= 1e-6):
            result = fallback
    except np.linalg.LinAlgError:
        result = fallback
    return np.where(result > 1e-12, result, 1.0)


def normalize(F: np.ndarray) -> np.ndarray:
    """
    Translate by the ideal point and scale by the hyperplane intercepts.
    :param F: (n, M) objectives to minimize
    :return: normalized objectives
    """
    F = np.asarray(F, dtype=float)
    translated = F - F.min(axis=0)
    return translated / intercepts(translated)


def perpendicular_distances(points: np.ndarray, directions: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Projection length along and distance to every direction.
    :param points: (n, M)
    :param directions: (r, M), non-zero
    :return: (d1, d2) each (n, r)
    """
    units = directions / np.linalg.norm(directions, axis=1)[:, None]
    d1 = points @ units.T
    squared = np.sum(points**2, axis=1)[:, None] - d1**2
    return d1, np.sqrt(np.maximum(squared, 0.0))


def associate(points: np.ndarray, directions: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Attach each point to the direction with the smallest perpendicular distance.
    :param points: normalized objectives
    :param directions: reference directions
    :return: (direction index, d1, d2) per point
    """
    d1, d2 = perpendicular_distances(points, directions)
    nearest = np.argmin(d2, axis=1)
    rows = np.arange(len(points))
    return nearest, d1[rows, nearest], d2[rows, nearest]
