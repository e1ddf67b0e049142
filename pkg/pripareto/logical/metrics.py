# -*- coding: utf-8 -*-#
"""Quality indicators over scaled objective sets.

Coordinates are scaled with the extrema of the best set B, so B spans the unit hypercube. Hypervolume is
reported at reference points c·(1, ..., 1) for several multipliers c, next to GD, IGD and the number of
points each set contributes to B.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Sequence, Tuple

import numpy as np
import pandas as pd  # type: ignore
from scipy.spatial import cKDTree  # type: ignore

from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.error import InvalidArgumentError
from pripareto.logical.hypervolume import hypervolume_batch

MULTIPLIERS = (0.9, 1.0, 1.1)
BEST = "B"
DEFAULT_SAMPLES = 1_000_000


@dataclass(frozen=True)
class ScalingBounds:
    """Per-objective extrema of the reference set, bmin maps to 0 and bmax to 1."""

    bmin: Tuple[float, ...]
    bmax: Tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.bmin) != len(self.bmax):
            raise ValueError("bmin and bmax differ in length")
        if any(lo > hi for lo, hi in zip(self.bmin, self.bmax)):
            raise ValueError("bmin must not exceed bmax")
        object.__setattr__(self, "bmin", tuple(float(v) for v in self.bmin))
        object.__setattr__(self, "bmax", tuple(float(v) for v in self.bmax))


def _matrix(points: Any) -> np.ndarray:
    return np.atleast_2d(np.asarray(getattr(points, "F", points), dtype=float))


def compute_bounds(B: Any) -> ScalingBounds:
    """
    Exact per-objective extrema of a reference set.
    :param B: point set or (n, M) objectives to minimize
    :return: ScalingBounds
    """
    F = _matrix(B)
    if F.size == 0:
        raise InvalidArgumentError("bounds of an empty set")
    return ScalingBounds(tuple(F.min(axis=0)), tuple(F.max(axis=0)))


def scale(points: Any, bounds: ScalingBounds) -> np.ndarray:
    """
    Affine map of every coordinate from [bmin, bmax] to [0, 1]; a coordinate with bmin = bmax maps to 0.
    :param points: point set or (n, M) objectives
    :param bounds: scaling bounds
    :return: scaled (n, M) array
    """
    F = _matrix(points)
    low = np.asarray(bounds.bmin)
    span = np.asarray(bounds.bmax) - low
    return np.where(span > 0, (F - low) / np.where(span > 0, span, 1.0), 0.0)


def gd(P: Any, B: Any, bounds: ScalingBounds | None = None) -> float:
    """
    Generational distance: mean distance from each point of P to its nearest point of B.
    :param P: nonempty point set
    :param B: nonempty reference set
    :param bounds: scale both sets first when given
    :return: float
    """
    P, B = _matrix(P), _matrix(B)
    if bounds is not None:
        P, B = scale(P, bounds), scale(B, bounds)
    if P.size == 0 or B.size == 0:
        raise InvalidArgumentError("distance between empty sets")
    distances, _ = cKDTree(B).query(P, k=1)
    return float(np.mean(distances))


def igd(P: Any, B: Any, bounds: ScalingBounds | None = None) -> float:
    """Inverted generational distance, GD with the arguments swapped."""
    return gd(B, P, bounds)


@dataclass(frozen=True)
class Contribution:
    size: int
    survivors: int

    @property
    def ratio(self) -> float:
        return self.survivors / self.size if self.size else 0.0


def contribution_counts(sets: Mapping[str, Any], B: Any) -> Dict[str, Contribution]:
    """
    Points of every set that survive in the best set, matched by decision vector.
    :param sets: point sets by name
    :param B: best set
    :return: Contribution per name
    """
    best = set(B.keys())
    return {
        name: Contribution(len(s), sum(1 for key in set(s.keys()) if key in best))
        for name, s in sets.items()
    }


@dataclass(frozen=True)
class AlgorithmMetrics:
    """One column of the report."""

    name: str
    size: int
    survivors: int
    ratio: float
    hypervolume: Tuple[float, ...]
    hypervolume_ratio: Tuple[float, ...]
    std_error: Tuple[float, ...]
    gd: float
    igd: float


@dataclass(frozen=True)
class MetricsReport:
    config_hash: str
    multipliers: Tuple[float, ...]
    samples: int
    seed: int
    bounds: ScalingBounds
    realistic: bool
    best: AlgorithmMetrics
    algorithms: Tuple[AlgorithmMetrics, ...]
    run_seeds: Tuple[int, ...] = ()

    def table(self) -> pd.DataFrame:
        """Rows are metrics, columns the best set followed by every algorithm."""
        rows: Dict[str, Dict[str, float]] = {}
        for column in (self.best,) + self.algorithms:
            values: Dict[str, float] = {
                "#P": column.size,
                "#(P ∩ B)": column.survivors,
                "(P ∩ B)/P": column.ratio,
            }
            for c, hv, ratio, error in zip(
                self.multipliers, column.hypervolume, column.hypervolume_ratio, column.std_error
            ):
                values[f"HV_{c:g}"] = hv
                values[f"HV_{c:g}/HV_{c:g}(B)"] = ratio
                values[f"HV_{c:g} std error"] = error
            values["GD"] = column.gd
            values["IGD"] = column.igd
            rows[column.name] = values
        return pd.DataFrame(rows)


@instrument_class_function(name="compute_metrics", level=logging.INFO)
def compute_metrics(
    sets: Mapping[str, Any],
    B: Any,
    reference: Any = None,
    multipliers: Sequence[float] = MULTIPLIERS,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> MetricsReport:
    """
    Full comparison of point sets against the best set.
    :param sets: ND point sets by algorithm
    :param B: best set
    :param reference: set the scaling bounds and hypervolume are computed over, B by default (B+ on request)
    :param multipliers: hypervolume reference multipliers
    :param samples: Monte Carlo samples per multiplier
    :param seed: seed of the shared sample set
    :return: MetricsReport
    """
    reference = B if reference is None else reference
    bounds = compute_bounds(reference)
    scaled_best = scale(reference, bounds)
    scaled = {name: scale(s, bounds) for name, s in sets.items() if len(s)}
    if BEST in sets:
        raise InvalidArgumentError(f"set name {BEST} is reserved for the best set")
    best_estimates, hv = hypervolume_batch(scaled, scaled_best, multipliers, samples, seed)
    best_hv = tuple(best_estimates[float(c)][0] for c in multipliers)
    counts = contribution_counts(sets, B)

    def column(name: str, size: int, survivors: int, points: np.ndarray | None) -> AlgorithmMetrics:
        if name == BEST:
            estimates = tuple(best_estimates[float(c)] for c in multipliers)
        else:
            estimates = tuple(hv[float(c)][name] for c in multipliers) if points is not None else ()
        values = tuple(e[0] for e in estimates) or tuple(0.0 for _ in multipliers)
        return AlgorithmMetrics(
            name=name,
            size=size,
            survivors=survivors,
            ratio=survivors / size if size else 0.0,
            hypervolume=values,
            hypervolume_ratio=tuple(v / b if b > 0 else 0.0 for v, b in zip(values, best_hv)),
            std_error=tuple(e[1] for e in estimates) or tuple(0.0 for _ in multipliers),
            gd=gd(points, scaled_best) if points is not None else float("nan"),
            igd=igd(points, scaled_best) if points is not None else float("nan"),
        )

    best_column = column(BEST, len(reference), len(reference), scaled_best)
    columns = tuple(
        column(name, counts[name].size, counts[name].survivors, scaled.get(name))
        for name in sets
    )
    return MetricsReport(
        config_hash=B.config_hash,
        multipliers=tuple(float(c) for c in multipliers),
        samples=samples,
        seed=seed,
        bounds=bounds,
        realistic=reference is not B,
        best=best_column,
        algorithms=columns,
        run_seeds=tuple(
            sorted({seed for S in (B, *sets.values()) for seed in getattr(S, "seeds", ())})
        ),
    )
