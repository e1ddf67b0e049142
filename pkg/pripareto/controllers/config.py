# -*- coding: utf-8 -*-#
"""Run configuration from a JSON document, command-line overrides and the environment."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from pripareto.algorithms import ALGORITHMS
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.variation import VariationConfig
from pripareto.physical.radar import (
    DEFAULT_EVALUATION,
    DEFAULT_RADAR,
    MAX_DIMENSION,
    MIN_DIMENSION,
    EvaluationConfig,
    RadarParams,
)

SECTIONS = ("radar", "evaluation", "variation", "algorithms", "run")


@dataclass(frozen=True)
class RunConfig:
    """One experiment: every listed algorithm runs `runs` times with seeds base_seed + run index."""

    algorithms: Tuple[str, ...] = tuple(ALGORITHMS)
    dimension: int = 10
    popsize: int = 100
    evaluations: int = 100_000
    runs: int = 10
    base_seed: int = 0
    output: Path = Path("results")
    radar: RadarParams = DEFAULT_RADAR
    evaluation: EvaluationConfig = DEFAULT_EVALUATION
    variation: VariationConfig = field(default_factory=VariationConfig)
    hyperparameters: Mapping[str, Mapping[str, Any]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.algorithms:
            raise ConfigurationError("no algorithm selected")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ConfigurationError(
                f"unknown algorithm {', '.join(unknown)}, expected one of {', '.join(ALGORITHMS)}"
            )
        if not MIN_DIMENSION <= self.dimension <= MAX_DIMENSION:
            raise ConfigurationError(
                f"dimension {self.dimension} outside [{MIN_DIMENSION}, {MAX_DIMENSION}]"
            )
        if self.popsize < 2:
            raise ConfigurationError(f"population size {self.popsize} below 2")
        if self.popsize > self.evaluations:
            raise ConfigurationError(
                f"population size {self.popsize} exceeds {self.evaluations} evaluations"
            )
        if self.runs < 1:
            raise ConfigurationError("at least one run required")

    def seed(self, run: int) -> int:
        return self.base_seed + run

    @property
    def seeds(self) -> Tuple[int, ...]:
        return tuple(self.seed(r) for r in range(self.runs))


def parallel_jobs() -> int:
    """Worker processes for independent runs, from PRIPARETO_JOBS (default 1)."""
    try:
        return int(os.getenv("PRIPARETO_JOBS", "1"))
    except ValueError as e:
        raise ConfigurationError(f"PRIPARETO_JOBS must be an integer: {e}") from e


def read_document(path: Optional[Path | str]) -> Dict[str, Any]:
    """
    Read a configuration document, missing sections are empty.
    :param path: JSON file or None
    :return: sections
    :raises ConfigurationError: unreadable document or unknown section
    """
    if path is None:
        return {section: {} for section in SECTIONS}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"cannot read configuration {path}: {e}") from e
    if not isinstance(document, dict):
        raise ConfigurationError(f"configuration {path} is not a key-value document")
    unknown = set(document) - set(SECTIONS)
    if unknown:
        raise ConfigurationError(f"unknown configuration sections {', '.join(sorted(unknown))}")
    return {section: document.get(section, {}) or {} for section in SECTIONS}


def _build(cls, values: Mapping[str, Any], section: str):
    names = {f.name for f in fields(cls)}
    unknown = set(values) - names
    if unknown:
        raise ConfigurationError(f"unknown keys in {section}: {', '.join(sorted(unknown))}")
    converted = {k: tuple(v) if isinstance(v, list) else v for k, v in values.items()}
    try:
        return cls(**converted)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"invalid {section} configuration: {e}") from e


def model_configs(document: Mapping[str, Any]) -> Tuple[RadarParams, EvaluationConfig]:
    """Radar and evaluation settings of a document, defaults where keys are missing."""
    return (
        _build(RadarParams, document.get("radar", {}), "radar"),
        _build(EvaluationConfig, document.get("evaluation", {}), "evaluation"),
    )


def build_run_config(
    document: Mapping[str, Any], overrides: Optional[Mapping[str, Any]] = None
) -> RunConfig:
    """
    Merge a configuration document with command-line overrides, the latter win.
    :param document: sections from read_document
    :param overrides: RunConfig fields, None values are ignored
    :return: RunConfig
    :raises ConfigurationError: invalid value or combination
    """
    radar, evaluation = model_configs(document)
    variation_values = {"lower": float(radar.lower_ticks), "upper": float(radar.upper_ticks)}
    variation_values.update(document.get("variation", {}))
    variation = _build(VariationConfig, variation_values, "variation")
    hyperparameters = document.get("algorithms", {})
    if not isinstance(hyperparameters, dict) or set(hyperparameters) - set(ALGORITHMS):
        raise ConfigurationError(
            f"algorithms section must map ids among {', '.join(ALGORITHMS)} to settings"
        )
    run_values = dict(document.get("run", {}))
    run_values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    if "algorithms" in run_values:
        selected = run_values["algorithms"]
        selected = [selected] if isinstance(selected, str) else list(selected)
        run_values["algorithms"] = tuple(ALGORITHMS) if "all" in selected else tuple(selected)
    if "output" in run_values:
        run_values["output"] = Path(run_values["output"])
    config = _build(RunConfig, run_values, "run")
    return replace(
        config,
        radar=radar,
        evaluation=evaluation,
        variation=variation,
        hyperparameters=hyperparameters,
    )
