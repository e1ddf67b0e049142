import json

import pytest

from pripareto.algorithms import ALGORITHMS
from pripareto.conceptual.error import ConfigurationError
from pripareto.controllers.config import (
    RunConfig,
    build_run_config,
    model_configs,
    parallel_jobs,
    read_document,
)
from pripareto.physical.radar import RadarParams


def test_defaults():
    config = build_run_config(read_document(None))
    assert config.algorithms == tuple(ALGORITHMS)
    assert (config.dimension, config.popsize, config.evaluations, config.runs) == (10, 100, 100_000, 10)
    assert config.seeds == tuple(range(10))
    assert (config.variation.lower, config.variation.upper) == (500.0, 1500.0)


def test_document_and_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps(
            {
                "radar": {"fft_size": 32},
                "evaluation": {"range_cell_stride": 20},
                "variation": {"pm_prob": 0.2},
                "algorithms": {"ibea": {"kappa": 0.1}},
                "run": {"runs": 3, "base_seed": 7, "algorithms": ["ibea"]},
            }
        )
    )
    config = build_run_config(read_document(path), {"runs": 2, "dimension": None})
    assert config.runs == 2
    assert config.dimension == 10
    assert config.seeds == (7, 8)
    assert config.algorithms == ("ibea",)
    assert config.radar == RadarParams(fft_size=32)
    assert config.evaluation.range_cell_stride == 20
    assert config.variation.pm_prob == 0.2
    assert config.hyperparameters == {"ibea": {"kappa": 0.1}}


def test_all_expands_to_every_algorithm():
    config = build_run_config(read_document(None), {"algorithms": ["nsga2", "all"]})
    assert config.algorithms == tuple(ALGORITHMS)


def test_unknown_section(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"plots": {}}))
    with pytest.raises(ConfigurationError):
        read_document(path)


def test_unreadable_document(tmp_path):
    with pytest.raises(ConfigurationError):
        read_document(tmp_path / "missing.json")
    (tmp_path / "broken.json").write_text("{")
    with pytest.raises(ConfigurationError):
        read_document(tmp_path / "broken.json")


def test_invalid_values():
    document = read_document(None)
    with pytest.raises(ConfigurationError):
        build_run_config(document, {"dimension": 3})
    with pytest.raises(ConfigurationError):
        build_run_config(document, {"popsize": 300, "evaluations": 200})
    with pytest.raises(ConfigurationError):
        build_run_config(document, {"algorithms": ["spea2"]})
    with pytest.raises(ConfigurationError):
        build_run_config({**document, "radar": {"duty_cycle": 2.0}})
    with pytest.raises(ConfigurationError):
        model_configs({"radar": {"antenna": 1}})
    with pytest.raises(ConfigurationError):
        build_run_config({**document, "algorithms": {"spea2": {}}})


def test_seeds_follow_base_seed():
    assert RunConfig(runs=3, base_seed=5).seeds == (5, 6, 7)


def test_parallel_jobs(monkeypatch):
    monkeypatch.delenv("PRIPARETO_JOBS", raising=False)
    assert parallel_jobs() == 1
    monkeypatch.setenv("PRIPARETO_JOBS", "4")
    assert parallel_jobs() == 4
    monkeypatch.setenv("PRIPARETO_JOBS", "many")
    with pytest.raises(ConfigurationError):
        parallel_jobs()
