# -*- coding: utf-8 -*-#
"""Coincidence decoding of folded measurements and the admissible error before ghosting."""
from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np

from pripareto.conceptual.error import InvalidArgumentError


def folded_distance(a, b, modulus):
    """
    Circular distance between two positions folded on a modulus.
    Works element-wise on numpy arrays.
    :param a: position
    :param b: position
    :param modulus: positive fold length
    :return: distance in [0, modulus / 2]
    :raises InvalidArgumentError: non-positive modulus
    """
    modulus = np.asarray(modulus, dtype=float)
    if np.any(modulus <= 0):
        raise InvalidArgumentError("modulus must be strictly positive")
    d = np.mod(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)), modulus)
    return np.minimum(d, modulus - d)


def ghost_activation(offsets: np.ndarray, moduli: np.ndarray, coincidence: int = 3) -> np.ndarray:
    """
    Smallest measurement error at which a cell at the given offsets from the true target collects
    `coincidence` matching folded measurements, i.e. the coincidence-th smallest folded residual.
    :param offsets: offsets of the candidate cells from the true position
    :param moduli: fold length per PRF
    :param coincidence: number of PRFs required for a decode
    :return: one tolerance per offset
    """
    residuals = folded_distance(
        np.asarray(offsets, dtype=float)[:, None], 0.0, np.asarray(moduli, dtype=float)[None, :]
    )
    return np.partition(residuals, coincidence - 1, axis=1)[:, coincidence - 1]


def decodability_tolerance(
    moduli: Sequence[float] | np.ndarray,
    true_pos: float,
    domain: Tuple[float, float],
    grid_step: float,
    extent: float,
    cap: float,
    coincidence: int = 3,
) -> float:
    """
    Admissible measurement error before the first ghost appears for a target at true_pos.
    Ghost candidates are the grid cells of the domain further than extent from the target.
    :param moduli: fold length per PRF
    :param true_pos: position of the true target, inside the domain
    :param domain: (lo, hi) of the searched domain
    :param grid_step: cell size of the domain grid
    :param extent: maximum target extent, cells within it are not ghosts
    :param cap: upper bound of the reported tolerance
    :param coincidence: number of PRFs required for a decode
    :return: tolerance, cap when there is no ghost candidate
    """
    moduli = np.asarray(moduli, dtype=float)
    if moduli.size < coincidence:
        raise InvalidArgumentError(f"{moduli.size} moduli, at least {coincidence} required")
    if grid_step <= 0:
        raise InvalidArgumentError("grid_step must be strictly positive")
    lo, hi = domain
    if not lo <= true_pos <= hi:
        raise InvalidArgumentError(f"true position {true_pos} outside [{lo}, {hi}]")
    cells = lo + grid_step * np.arange(math.floor((hi - lo) / grid_step + 1e-9) + 1)
    offsets = cells - true_pos
    offsets = offsets[np.abs(offsets) > extent]
    if offsets.size == 0:
        return float(cap)
    return float(min(cap, ghost_activation(offsets, moduli, coincidence).min()))


def decodability_profile(
    moduli: np.ndarray,
    n_cells: int,
    grid_step: float,
    extent_cells: int,
    cap: float,
    coincidence: int = 3,
) -> np.ndarray:
    """
    Decodability tolerance of a true target at every cell of a uniform grid of n_cells cells.
    The ghost activation only depends on the offset between cells, so it is computed once per offset and
    a running minimum over growing offsets gives the answer for every true cell.
    :param moduli: fold length per PRF
    :param n_cells: number of grid cells in the domain
    :param grid_step: cell size
    :param extent_cells: cells at an offset up to this count are part of the target
    :param cap: upper bound of the reported tolerance
    :param coincidence: number of PRFs required for a decode
    :return: tolerance per true cell index
    """
    activation = ghost_activation(np.arange(n_cells) * grid_step, moduli, coincidence)
    activation[: extent_cells + 1] = np.inf
    running = np.minimum.accumulate(activation)
    index = np.arange(n_cells)
    reach = np.maximum(index, n_cells - 1 - index)
    return np.minimum(cap, running[reach])
