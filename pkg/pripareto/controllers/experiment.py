# -*- coding: utf-8 -*-#
"""Experiment runner: independent seeded runs per algorithm, evaluation logs and non-dominated sets."""
from __future__ import annotations

import logging
from dataclasses import asdict
from datetime import datetime, timezone
from time import perf_counter
from typing import Dict, List, Tuple

from joblib import Parallel, delayed  # type: ignore

from pripareto.algorithms import create_algorithm
from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.loop import run_algorithm
from pripareto.conceptual.support import RandomStream
from pripareto.controllers.config import RunConfig, parallel_jobs
from pripareto.logical.archive import EvaluationRecord, PointSet, RunRecorder, nd_filter
from pripareto.persistance.store import Store
from pripareto.physical.model import N_OBJECTIVES, RadarProblem


def log_name(algo: str, run: int) -> str:
    return f"{algo}/run{run}.csv"


def nd_name(algo: str) -> str:
    return f"{algo}_nd.json"


def single_run(config: RunConfig, algo: str, run: int) -> Tuple[List[EvaluationRecord], float]:
    """
    Execute one run.
    :param config: experiment configuration
    :param algo: algorithm id
    :param run: run index, the seed is base_seed + run
    :return: (records in evaluation order, wall time in seconds)
    """
    problem = RadarProblem(config.dimension, config.radar, config.evaluation)
    algorithm = create_algorithm(algo, config.variation, config.hyperparameters.get(algo))
    recorder = RunRecorder(run, algo, config.radar)
    started = perf_counter()
    run_algorithm(
        algorithm,
        problem,
        config.popsize,
        config.evaluations,
        RandomStream(config.seed(run)),
        recorder,
    )
    return recorder.records, perf_counter() - started


def check_algorithms(config: RunConfig) -> None:
    """Instantiate every algorithm once so configuration errors surface before the first run."""
    RadarProblem(config.dimension, config.radar, config.evaluation)
    for algo in config.algorithms:
        create_algorithm(algo, config.variation, config.hyperparameters.get(algo)).setup(
            N_OBJECTIVES, config.popsize
        )


@instrument_class_function(name="cmd_run", level=logging.INFO)
def cmd_run(config: RunConfig, store: Store) -> Dict[str, Dict[str, float]]:
    """
    Run the experiment and write, per algorithm, one log per run, the non-dominated set of all its runs
    and a timing sidecar.
    :param config: experiment configuration
    :param store: store rooted at the output directory
    :return: summary per algorithm (evaluations, ND count, wall time)
    :raises ConfigurationError: invalid algorithm settings
    """
    logger = logging.getLogger(__name__)
    check_algorithms(config)
    config_hash = RadarProblem(config.dimension, config.radar, config.evaluation).config_hash
    tasks = [(algo, run) for algo in config.algorithms for run in range(config.runs)]
    jobs = parallel_jobs()
    logger.info(f"{len(tasks)} runs of {config.evaluations} evaluations, {jobs} worker(s)")
    if jobs == 1:
        results = [single_run(config, algo, run) for algo, run in tasks]
    else:
        results = Parallel(n_jobs=jobs, prefer="processes")(
            delayed(single_run)(config, algo, run) for algo, run in tasks
        )
    summary: Dict[str, Dict[str, float]] = {}
    for algo in config.algorithms:
        records: List[EvaluationRecord] = []
        evaluations = 0
        timings = []
        for (task_algo, run), (run_records, wall_time) in zip(tasks, results):
            if task_algo != algo:
                continue
            store.write_log(
                run_records,
                log_name(algo, run),
                {"config_hash": config_hash, "algo": algo, "run": run, "seed": config.seed(run)},
            )
            evaluations += len(run_records)
            records.extend(nd_filter(PointSet(tuple(run_records), config_hash)).records)
            timings.append({"run": run, "seed": config.seed(run), "wall_time_s": wall_time})
        algorithm = create_algorithm(algo, config.variation, config.hyperparameters.get(algo))
        front = nd_filter(
            PointSet(
                tuple(records),
                config_hash,
                metadata={
                    "algo": algo,
                    "dimension": config.dimension,
                    "popsize": config.popsize,
                    "evaluations": config.evaluations,
                    "seeds": list(config.seeds),
                    "variation": asdict(config.variation),
                    "hyperparameters": algorithm.hyperparameters(),
                },
            )
        )
        store.save_point_set(front, nd_name(algo))
        store.save_json(
            {
                "algo": algo,
                "config_hash": config_hash,
                "runs": timings,
                "finished": datetime.now(timezone.utc).isoformat(),
            },
            f"{algo}_timing.json",
        )
        summary[algo] = {
            "evaluations": float(evaluations),
            "nondominated": float(len(front)),
            "wall_time_s": sum(t["wall_time_s"] for t in timings),
        }
        logger.info(
            f"{algo}: {evaluations} evaluations, {len(front)} non-dominated, "
            f"{summary[algo]['wall_time_s']:.1f}s"
        )
    return summary
