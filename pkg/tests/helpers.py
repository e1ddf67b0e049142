# -*- coding: utf-8 -*-#
from typing import List, Sequence

import numpy as np

from pripareto.logical.archive import EvaluationRecord, PointSet

X_S = [510, 570, 630, 660, 690, 780, 900, 960]
X_A = [510, 530, 590, 620, 690, 720, 910, 940]


def brute_force_front(F: np.ndarray) -> List[int]:
    F = np.asarray(F, dtype=float)
    front = []
    for i in range(len(F)):
        dominated = False
        for j in range(len(F)):
            if np.all(F[j] <= F[i]) and np.any(F[j] < F[i]):
                dominated = True
                break
        if not dominated:
            front.append(i)
    return front


def synthetic_point_set(
    F: np.ndarray, config_hash: str = "h" * 64, algo: str = "synthetic", offset: int = 0
) -> PointSet:
    """Point set over given minimization vectors (9 columns, last one positive), unique decisions."""
    records = []
    for i, f in enumerate(np.asarray(F, dtype=float)):
        index = offset + i
        decision = (500 + index % 1000, 500 + index // 1000 % 1000, 600, 700)
        records.append(
            EvaluationRecord(0, algo, index, decision, tuple(-v for v in f[:8]), float(f[8]))
        )
    return PointSet(tuple(records), config_hash)


def random_objectives(n: int, seed: int = 0) -> np.ndarray:
    generator = np.random.default_rng(seed)
    F = generator.random((n, 9))
    F[:, 8] = 40.0 + 10.0 * F[:, 8]
    return F


class ToyProblem:
    """Three smooth conflicting objectives over [500, 1500]^D."""

    n_objectives = 3

    def __init__(self, dimension: int = 4) -> None:
        self.dimension = dimension
        self.lower = np.full(dimension, 500.0)
        self.upper = np.full(dimension, 1500.0)

    def evaluate(self, decision: Sequence[float]) -> np.ndarray:
        x = (np.asarray(decision, dtype=float) - 500.0) / 1000.0
        g = np.sum((x[2:] - 0.5) ** 2)
        a, b = x[0] * np.pi / 2, x[1] * np.pi / 2
        return (1 + g) * np.array(
            [np.cos(a) * np.cos(b), np.cos(a) * np.sin(b), np.sin(a)]
        )


class ListRecorder:
    def __init__(self) -> None:
        self.calls = []

    def record(self, decision, objectives, eval_index) -> None:
        self.calls.append((np.array(decision), np.array(objectives), eval_index))


def scan_decodability(moduli, true_pos, domain, grid_step, extent, cap, coincidence=3) -> float:
    """Grow the error over every folded residual until some ghost cell collects enough matches."""
    lo, hi = domain
    cells = [lo + grid_step * i for i in range(int(round((hi - lo) / grid_step)) + 1)]
    ghosts = [c for c in cells if abs(c - true_pos) > extent]
    candidates = set()
    for g in ghosts:
        for m in moduli:
            d = abs(g - true_pos) % m
            candidates.add(min(d, m - d))
    for eps in sorted(candidates):
        if eps > cap:
            break
        for g in ghosts:
            matches = 0
            for m in moduli:
                d = abs(g - true_pos) % m
                if min(d, m - d) <= eps:
                    matches += 1
            if matches >= coincidence:
                return eps
    return cap


def scan_blindness(clearances, coincidence=3) -> float:
    """Smallest patch growth after which fewer than `coincidence` PRFs stay clear."""
    for delta in sorted(set(clearances)):
        if sum(1 for c in clearances if c > delta) < coincidence:
            return delta
    return 0.0
