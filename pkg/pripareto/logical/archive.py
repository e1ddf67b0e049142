# -*- coding: utf-8 -*-#
"""Evaluation records, point sets and the empirical Pareto front pipeline.

Every evaluation of a run is recorded; per algorithm the non-dominated records form a set P, the merge of all
sets is the best set B. Filters select the realistic part of B, a dwell window or the record closest to a query.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Literal, Mapping, Optional, Sequence, Tuple

import numpy as np

from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.error import IncompatibleModelError, InvalidArgumentError
from pripareto.logical.metrics import ScalingBounds, scale
from pripareto.physical.model import N_MARGINS, ObjectiveVector, evaluate, is_realistic
from pripareto.physical.radar import (
    DEFAULT_EVALUATION,
    DEFAULT_RADAR,
    EvaluationConfig,
    PriVector,
    RadarParams,
    quantize,
)

NdMethod = Literal["scan", "divide"]
BLOCK = 1024
BRUTE_FORCE_SIZE = 256


@dataclass(frozen=True)
class EvaluationRecord:
    """One evaluation: decision in PRI ticks, eight raw margins and the dwell in ms."""

    run: int
    algo: str
    eval_index: int
    decision: Tuple[int, ...]
    margins: Tuple[float, ...]
    dwell_ms: float

    def __post_init__(self) -> None:
        if len(self.margins) != N_MARGINS:
            raise ValueError(f"expected {N_MARGINS} margins, got {len(self.margins)}")
        if any(t <= 0 for t in self.decision):
            raise ValueError("decision ticks must be strictly positive")
        object.__setattr__(self, "decision", tuple(int(t) for t in self.decision))
        object.__setattr__(self, "margins", tuple(float(m) for m in self.margins))

    @classmethod
    def from_evaluation(
        cls,
        run: int,
        algo: str,
        eval_index: int,
        decision: Sequence[float] | np.ndarray,
        objectives: ObjectiveVector,
        params: RadarParams = DEFAULT_RADAR,
    ) -> EvaluationRecord:
        return cls(
            run,
            algo,
            eval_index,
            quantize(decision, params).ticks,
            objectives.margins,
            objectives.dwell,
        )

    @property
    def objectives(self) -> ObjectiveVector:
        return ObjectiveVector(self.margins, self.dwell_ms)

    @property
    def minimization(self) -> np.ndarray:
        return self.objectives.minimization

    @property
    def source(self) -> str:
        return f"{self.algo}/{self.run}"


@dataclass(frozen=True)
class PointSet:
    """
    Immutable set of records. provenance lists, per record, every source (algo/run or file) that produced
    the same decision vector.
    """

    records: Tuple[EvaluationRecord, ...]
    config_hash: str
    provenance: Tuple[Tuple[str, ...], ...] = ()
    nd_filtered: bool = False
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "records", tuple(self.records))
        if not self.provenance:
            object.__setattr__(self, "provenance", tuple((r.source,) for r in self.records))
        if len(self.provenance) != len(self.records):
            raise ValueError(
                f"{len(self.provenance)} provenance entries for {len(self.records)} records"
            )

    @cached_property
    def F(self) -> np.ndarray:
        """Minimization view, (n, 9)."""
        if not self.records:
            return np.empty((0, N_MARGINS + 1))
        return np.array(
            [[-m for m in r.margins] + [r.dwell_ms] for r in self.records], dtype=float
        )

    @cached_property
    def dwell(self) -> np.ndarray:
        return np.array([r.dwell_ms for r in self.records], dtype=float)

    @cached_property
    def eval_index(self) -> np.ndarray:
        return np.array([r.eval_index for r in self.records], dtype=np.int64)

    @property
    def seeds(self) -> Tuple[int, ...]:
        """Seeds of the runs the records were produced by, as declared in the metadata."""
        return tuple(sorted({int(s) for s in self.metadata.get("seeds", ())}))

    def keys(self) -> List[Tuple[int, ...]]:
        return [r.decision for r in self.records]

    def subset(self, indices: Sequence[int] | np.ndarray, **changes: Any) -> PointSet:
        """Records at the given positions, keeping order, hash and metadata."""
        indices = [int(i) for i in np.asarray(indices, dtype=np.int64)]
        values: Dict[str, Any] = {
            "records": tuple(self.records[i] for i in indices),
            "config_hash": self.config_hash,
            "provenance": tuple(self.provenance[i] for i in indices),
            "nd_filtered": self.nd_filtered,
            "metadata": dict(self.metadata),
        }
        values.update(changes)
        return PointSet(**values)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def deduplicate(S: PointSet) -> PointSet:
    """
    Keep the first record of every decision vector, merging the provenance of its duplicates.
    :param S: point set
    :return: point set without duplicate decisions
    """
    first: Dict[Tuple[int, ...], int] = {}
    sources: Dict[Tuple[int, ...], set] = {}
    for i, record in enumerate(S.records):
        first.setdefault(record.decision, i)
        sources.setdefault(record.decision, set()).update(S.provenance[i])
    if len(first) == len(S):
        return S
    keep = sorted(first.values())
    return S.subset(
        keep,
        provenance=tuple(tuple(sorted(sources[S.records[i].decision])) for i in keep),
    )


def _dominated_by(candidates: np.ndarray, front: np.ndarray) -> np.ndarray:
    """Mask of candidates dominated by at least one front point, evaluated in blocks."""
    dominated = np.zeros(len(candidates), dtype=bool)
    if len(front) == 0 or len(candidates) == 0:
        return dominated
    for start in range(0, len(front), BLOCK):
        block = front[start : start + BLOCK]
        open_ = np.flatnonzero(~dominated)
        if open_.size == 0:
            break
        for chunk in np.array_split(open_, max(1, open_.size // BLOCK)):
            c = candidates[chunk]
            weakly = np.all(block[:, None, :] <= c[None, :, :], axis=2)
            strictly = np.any(block[:, None, :] < c[None, :, :], axis=2)
            dominated[chunk] = np.any(weakly & strictly, axis=0)
    return dominated


def _sum_order(F: np.ndarray) -> np.ndarray:
    """Order by objective sum, then lexicographically; a dominating point always comes first."""
    return np.lexsort(tuple(F[:, ::-1].T) + (F.sum(axis=1),))


def _brute_force_mask(F: np.ndarray) -> np.ndarray:
    return ~_dominated_by(F, F)


def nondominated_mask_scan(F: np.ndarray) -> np.ndarray:
    """
    Sequential scan over points sorted by objective sum, in blocks. Dominating points come first in that
    order, so the front found so far never loses members.
    :param F: (n, M) objectives to minimize
    :return: mask of non-dominated points in input order
    """
    F = np.asarray(F, dtype=float)
    order = _sum_order(F)
    keep = np.zeros(len(F), dtype=bool)
    front = np.empty((0, F.shape[1]))
    for start in range(0, len(order), BLOCK):
        positions = order[start : start + BLOCK]
        block = F[positions]
        survivors = ~_dominated_by(block, front) & _brute_force_mask(block)
        keep[positions[survivors]] = True
        front = np.vstack([front, block[survivors]])
    return keep


def nondominated_mask_divide(F: np.ndarray) -> np.ndarray:
    """
    Divide and conquer over points sorted by objective sum: filter both halves, then drop the survivors of
    the upper half that the lower half dominates.
    :param F: (n, M) objectives to minimize
    :return: mask of non-dominated points in input order
    """
    F = np.asarray(F, dtype=float)
    order = _sum_order(F)

    def solve(positions: np.ndarray) -> np.ndarray:
        if len(positions) <= BRUTE_FORCE_SIZE:
            return positions[_brute_force_mask(F[positions])]
        middle = len(positions) // 2
        lower = solve(positions[:middle])
        upper = solve(positions[middle:])
        return np.concatenate([lower, upper[~_dominated_by(F[upper], F[lower])]])

    keep = np.zeros(len(F), dtype=bool)
    if len(F):
        keep[solve(order)] = True
    return keep


@instrument_class_function(name="nd_filter", level=logging.DEBUG)
def nd_filter(S: PointSet, method: NdMethod = "scan") -> PointSet:
    """
    Non-dominated subset in input order, duplicates of a decision vector are stored once.
    :param S: point set
    :param method: "scan" or "divide", both return the same subset
    :return: ND-filtered point set
    """
    S = deduplicate(S)
    if method == "scan":
        mask = nondominated_mask_scan(S.F)
    elif method == "divide":
        mask = nondominated_mask_divide(S.F)
    else:
        raise InvalidArgumentError(f"unknown non-dominated filter {method}")
    return S.subset(np.flatnonzero(mask), nd_filtered=True)


@instrument_class_function(name="merge_best", level=logging.INFO)
def merge_best(sets: Sequence[PointSet], method: NdMethod = "scan") -> PointSet:
    """
    Best set B: the non-dominated subset of the union of all sets.
    :param sets: point sets produced under one model configuration
    :param method: non-dominated filter
    :return: best set
    :raises IncompatibleModelError: sets produced under different model configurations
    """
    if not sets:
        raise InvalidArgumentError("nothing to merge")
    expected = sets[0].config_hash
    for s in sets[1:]:
        if s.config_hash != expected:
            raise IncompatibleModelError(expected, s.config_hash, s.metadata.get("path"))
    union = PointSet(
        tuple(r for s in sets for r in s.records),
        expected,
        tuple(p for s in sets for p in s.provenance),
        metadata={
            "merged": len(sets),
            "candidates": sum(len(s) for s in sets),
            "seeds": sorted({seed for s in sets for seed in s.seeds}),
        },
    )
    best = nd_filter(union, method)
    logging.getLogger(__name__).info(
        f"merged {len(sets)} sets: kept {len(best)} of {len(union)} candidates"
    )
    return best


def realistic_filter(S: PointSet, params: RadarParams = DEFAULT_RADAR) -> PointSet:
    """Records with every tolerance positive and the dwell within budget."""
    return S.subset([i for i, r in enumerate(S.records) if is_realistic(r.objectives, params)])


def dwell_window_filter(S: PointSet, lo: float, hi: float) -> PointSet:
    """
    Records with lo <= dwell <= hi (ms).
    :raises InvalidArgumentError: lo > hi
    """
    if lo > hi:
        raise InvalidArgumentError(f"empty dwell window [{lo}, {hi}]")
    return S.subset(np.flatnonzero((S.dwell >= lo) & (S.dwell <= hi)))


def closest_point(
    S: PointSet,
    target: ObjectiveVector | PriVector | Sequence[float],
    bounds: ScalingBounds,
    params: RadarParams = DEFAULT_RADAR,
    config: EvaluationConfig = DEFAULT_EVALUATION,
) -> Tuple[EvaluationRecord, float]:
    """
    Record nearest to a query in scaled objective space, ties go to the lowest eval_index.
    :param S: nonempty point set
    :param target: objective values, or a decision vector that is evaluated first
    :param bounds: ScalingBounds of the objective space
    :param params: radar characteristics for decision queries
    :param config: evaluation granularity for decision queries
    :return: (record, distance)
    """
    if len(S) == 0:
        raise InvalidArgumentError("closest point of an empty set")
    if not isinstance(target, ObjectiveVector):
        target = evaluate(target, params, config)
    points = scale(S.F, bounds)
    query = scale(target.minimization[None, :], bounds)[0]
    distances = np.linalg.norm(points - query, axis=1)
    best = int(np.lexsort((S.eval_index, distances))[0])
    return S.records[best], float(distances[best])


class RunRecorder:
    """Collects the evaluations of a single run, single writer."""

    def __init__(self, run: int, algo: str, params: RadarParams = DEFAULT_RADAR) -> None:
        self.run = run
        self.algo = algo
        self.params = params
        self.records: List[EvaluationRecord] = []

    def record(self, decision: np.ndarray, objectives: ObjectiveVector, eval_index: int) -> None:
        if self.records and eval_index <= self.records[-1].eval_index:
            raise InvalidArgumentError(
                f"eval_index {eval_index} after {self.records[-1].eval_index}"
            )
        self.records.append(
            EvaluationRecord.from_evaluation(
                self.run, self.algo, eval_index, decision, objectives, self.params
            )
        )

    def point_set(self, config_hash: str, metadata: Optional[Mapping[str, Any]] = None) -> PointSet:
        return PointSet(tuple(self.records), config_hash, metadata=dict(metadata or {}))

    def __len__(self) -> int:
        return len(self.records)
