# -*- coding: utf-8 -*-#
"""Analysis commands over stored point sets: merge, metrics, filter and report."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import pandas as pd  # type: ignore

from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.error import IncompatibleModelError, InvalidArgumentError
from pripareto.logical.archive import (
    NdMethod,
    PointSet,
    closest_point,
    dwell_window_filter,
    merge_best,
    realistic_filter,
)
from pripareto.logical.metrics import (
    DEFAULT_SAMPLES,
    MULTIPLIERS,
    MetricsReport,
    compute_bounds,
    compute_metrics,
    scale,
)
from pripareto.persistance.store import Store
from pripareto.physical.model import OBJECTIVE_NAMES
from pripareto.physical.radar import (
    DEFAULT_EVALUATION,
    DEFAULT_RADAR,
    EvaluationConfig,
    RadarParams,
)

EXTERNAL_SUFFIXES = (".pris", ".txt")
DEFAULT_BINS = 50


def set_name(path: Path | str) -> str:
    """Name of a set in reports: the file stem without the _nd suffix."""
    stem = Path(path).stem
    return stem[: -len("_nd")] if stem.endswith("_nd") else stem


def load_any(
    store: Store,
    path: Path | str,
    params: RadarParams = DEFAULT_RADAR,
    config: EvaluationConfig = DEFAULT_EVALUATION,
) -> PointSet:
    """Point-set document, or an external PRI file which is evaluated under the given model."""
    if Path(path).suffix in EXTERNAL_SUFFIXES:
        return store.import_pris(path, params, config)
    return store.load_point_set(path)


def require_hash(expected: str, S: PointSet) -> None:
    if S.config_hash != expected:
        raise IncompatibleModelError(expected, S.config_hash, S.metadata.get("path"))


@instrument_class_function(name="cmd_merge", level=logging.INFO)
def cmd_merge(
    store: Store,
    inputs: Sequence[Path | str],
    output: Path | str,
    params: RadarParams = DEFAULT_RADAR,
    config: EvaluationConfig = DEFAULT_EVALUATION,
    method: NdMethod = "scan",
) -> PointSet:
    """
    Merge point sets (and external PRI files) into the best set.
    :param store: file store
    :param inputs: point-set documents or external PRI files
    :param output: best-set document
    :param params: radar characteristics for external files
    :param config: evaluation granularity for external files
    :param method: non-dominated filter
    :return: best set
    :raises IncompatibleModelError: inputs from different model configurations
    """
    best = merge_best([load_any(store, p, params, config) for p in inputs], method)
    store.save_point_set(best, output)
    return best


@instrument_class_function(name="cmd_metrics", level=logging.INFO)
def cmd_metrics(
    store: Store,
    sets: Sequence[Path | str],
    best: Path | str,
    output: Path | str,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    realistic: bool = False,
    params: RadarParams = DEFAULT_RADAR,
) -> MetricsReport:
    """
    Compare algorithm sets against the best set and write the report document and table.
    :param store: file store
    :param sets: per-algorithm ND set documents
    :param best: best-set document
    :param output: report document
    :param samples: Monte Carlo samples per multiplier
    :param seed: seed of the shared sample set
    :param realistic: scale with the realistic part of the best set
    :param params: radar characteristics of the realistic criterion
    :return: MetricsReport
    """
    B = store.load_point_set(best)
    loaded: Dict[str, PointSet] = {}
    for path in sets:
        S = store.load_point_set(path)
        require_hash(B.config_hash, S)
        loaded[set_name(path)] = S
    reference = realistic_filter(B, params) if realistic else None
    if reference is not None and len(reference) == 0:
        raise InvalidArgumentError("the best set has no realistic point")
    report = compute_metrics(
        loaded, B, reference, multipliers=MULTIPLIERS, samples=samples, seed=seed
    )
    store.save_report(report, output)
    return report


@instrument_class_function(name="cmd_filter", level=logging.INFO)
def cmd_filter(
    store: Store,
    source: Path | str,
    output: Path | str,
    realistic: bool = False,
    dwell_min: Optional[float] = None,
    dwell_max: Optional[float] = None,
    closest_to: Optional[Path | str] = None,
    best: Optional[Path | str] = None,
    params: RadarParams = DEFAULT_RADAR,
    config: EvaluationConfig = DEFAULT_EVALUATION,
) -> PointSet:
    """
    Apply the realistic and dwell-window filters, then optionally keep the record closest to every PRI
    vector of an external file. Distances are scaled with the extrema of the best set, the unfiltered
    source when no best set is given.
    :param store: file store
    :param source: point-set document
    :param output: filtered point-set document
    :param realistic: keep realistic records only
    :param dwell_min: lower dwell bound in ms
    :param dwell_max: upper dwell bound in ms
    :param closest_to: external PRI file of queries
    :param best: best-set document providing the scaling bounds
    :param params: radar characteristics
    :param config: evaluation granularity for the queries
    :return: filtered set
    """
    S = store.load_point_set(source)
    reference = S
    if best is not None:
        reference = store.load_point_set(best)
        require_hash(reference.config_hash, S)
    if realistic:
        S = realistic_filter(S, params)
    if dwell_min is not None or dwell_max is not None:
        S = dwell_window_filter(
            S,
            dwell_min if dwell_min is not None else 0.0,
            dwell_max if dwell_max is not None else float("inf"),
        )
    if closest_to is not None:
        queries = store.import_pris(closest_to, params, config)
        require_hash(S.config_hash, queries)
        if len(S) == 0:
            raise InvalidArgumentError("no record left to search")
        bounds = compute_bounds(reference)
        positions, distances = [], []
        for query in queries.records:
            record, distance = closest_point(S, query.objectives, bounds, params, config)
            positions.append(S.records.index(record))
            distances.append(distance)
        S = S.subset(
            positions,
            metadata={
                **S.metadata,
                "queries": [list(q.decision) for q in queries],
                "distances": distances,
            },
        )
    logging.getLogger(__name__).info(f"{len(S)} records after filtering")
    store.save_point_set(S, output)
    return S


def raw_objectives(S: PointSet) -> np.ndarray:
    """Margins and dwell as measured, (n, 9)."""
    return np.column_stack([-S.F[:, :-1], S.F[:, -1]]) if len(S) else np.empty((0, 9))


def histograms(S: PointSet, bins: int = DEFAULT_BINS) -> pd.DataFrame:
    """
    Per-objective histogram of the raw objective values.
    :param S: point set, typically the realistic best set
    :param bins: bins per objective
    :return: frame with objective, bin, lower, upper and count columns
    """
    rows = []
    for name, values in zip(OBJECTIVE_NAMES, raw_objectives(S).T):
        counts, edges = np.histogram(values, bins=bins)
        for i, count in enumerate(counts):
            rows.append((name, i, edges[i], edges[i + 1], int(count)))
    return pd.DataFrame(rows, columns=["objective", "bin", "lower", "upper", "count"])


def scaled_quartiles(S: PointSet, reference: PointSet) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """
    Raw objective values of S scaled with the extrema of the reference set, and their quartiles.
    :param S: selected subset
    :param reference: set providing the scaling bounds
    :return: (scaled values, quartiles per objective)
    """
    raw = raw_objectives(reference)
    scaled = scale(raw_objectives(S), compute_bounds(raw))
    values = pd.DataFrame(scaled, columns=list(OBJECTIVE_NAMES))
    quartiles = pd.DataFrame(
        {
            "objective": list(OBJECTIVE_NAMES),
            "min": scaled.min(axis=0),
            "q1": np.percentile(scaled, 25, axis=0),
            "median": np.percentile(scaled, 50, axis=0),
            "q3": np.percentile(scaled, 75, axis=0),
            "max": scaled.max(axis=0),
        }
    )
    return values, quartiles


@instrument_class_function(name="cmd_report", level=logging.INFO)
def cmd_report(
    store: Store,
    best: Path | str,
    output: Path | str,
    bins: int = DEFAULT_BINS,
    subset: Optional[Path | str] = None,
    dwell_min: Optional[float] = None,
    dwell_max: Optional[float] = None,
    params: RadarParams = DEFAULT_RADAR,
) -> Dict[str, Path]:
    """
    Plot-ready data of the realistic best set: histograms of every objective and scaled values with
    quartiles of a selected subset (the realistic best set itself by default).
    :param store: file store
    :param best: best-set document
    :param output: directory of the data files
    :param bins: bins per histogram
    :param subset: point-set document selecting the records of the quartile data
    :param dwell_min: lower dwell bound of the quartile subset in ms
    :param dwell_max: upper dwell bound of the quartile subset in ms
    :param params: radar characteristics of the realistic criterion
    :return: written files by kind
    """
    if bins < 1:
        raise InvalidArgumentError(f"at least one bin required, got {bins}")
    realistic = realistic_filter(store.load_point_set(best), params)
    if len(realistic) == 0:
        raise InvalidArgumentError("the best set has no realistic point")
    selected = realistic
    if subset is not None:
        selected = store.load_point_set(subset)
        require_hash(realistic.config_hash, selected)
    if dwell_min is not None or dwell_max is not None:
        selected = dwell_window_filter(
            selected,
            dwell_min if dwell_min is not None else 0.0,
            dwell_max if dwell_max is not None else float("inf"),
        )
    if len(selected) == 0:
        raise InvalidArgumentError("the selected subset is empty")
    values, quartiles = scaled_quartiles(selected, realistic)
    output = Path(output)
    metadata = {"config_hash": realistic.config_hash, "seeds": realistic.seeds}
    return {
        "histograms": store.save_frame(
            histograms(realistic, bins), output / "histograms.csv", metadata
        ),
        "scaled": store.save_frame(values, output / "scaled.csv", metadata),
        "quartiles": store.save_frame(quartiles, output / "quartiles.csv", metadata),
    }
