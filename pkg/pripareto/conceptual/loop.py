# -*- coding: utf-8 -*-#
"""Generational loop shared by all optimizers.

The loop owns the evaluation budget: it samples the initial population, asks the algorithm for offspring,
evaluates them in order and hands every evaluation to the recorder before environmental selection.
"""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any, Optional, Protocol

import numpy as np
from opentelemetry import metrics  # type: ignore

from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.error import InvalidArgumentError
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream

if TYPE_CHECKING:
    from pripareto.algorithms.base import Algorithm

meter = metrics.get_meter("pripareto")
evaluation_counter = meter.create_counter(
    "pripareto.evaluations", unit="1", description="objective function evaluations"
)


class Problem(Protocol):
    dimension: int
    n_objectives: int
    lower: np.ndarray
    upper: np.ndarray

    def evaluate(self, decision: np.ndarray) -> Any: ...


class Recorder(Protocol):
    def record(self, decision: np.ndarray, objectives: Any, eval_index: int) -> None: ...


def minimization_view(objectives: Any) -> np.ndarray:
    """Objective values to minimize, raw arrays pass through."""
    if hasattr(objectives, "minimization"):
        return objectives.minimization
    return np.asarray(objectives, dtype=float)


def evaluate_batch(
    problem: Problem,
    decisions: np.ndarray,
    start: int,
    recorder: Optional[Recorder] = None,
    attributes: Optional[dict] = None,
) -> Population:
    """
    Evaluate decisions in order, numbering evaluations from start.
    :param problem: problem to evaluate
    :param decisions: (n, D) decision vectors
    :param start: evaluation index of the first decision
    :param recorder: receives every evaluation
    :param attributes: metric attributes
    :return: Population
    """
    vectors = []
    for offset, decision in enumerate(decisions):
        objectives = problem.evaluate(decision)
        if recorder is not None:
            recorder.record(decision, objectives, start + offset)
        vectors.append(objectives)
    evaluation_counter.add(len(vectors), attributes or {})
    return Population(
        decisions,
        np.array([minimization_view(v) for v in vectors]).reshape(len(vectors), -1),
        np.arange(start, start + len(vectors)),
        vectors,
    )


@instrument_class_function(name="run_algorithm", level=logging.DEBUG)
def run_algorithm(
    algorithm: Algorithm,
    problem: Problem,
    popsize: int,
    budget: int,
    rng: RandomStream,
    recorder: Optional[Recorder] = None,
) -> Population:
    """
    Run an algorithm until the evaluation budget is spent; the last generation is truncated so that
    exactly `budget` evaluations happen.
    :param algorithm: environmental selection and mating
    :param problem: problem to solve
    :param popsize: population size
    :param budget: number of evaluations
    :param rng: random stream, the only source of randomness
    :param recorder: receives every evaluation in order
    :return: final population
    :raises InvalidArgumentError: budget smaller than the population
    :raises ConfigurationError: algorithm settings incompatible with the problem
    """
    if popsize < 2:
        raise InvalidArgumentError(f"population size {popsize} below 2")
    if budget < popsize:
        raise InvalidArgumentError(f"budget {budget} below population size {popsize}")
    logger = logging.getLogger(__name__)
    algorithm.setup(problem.n_objectives, popsize)
    attributes = {"algorithm": algorithm.name}
    initial = rng.uniform(problem.lower, problem.upper, size=(popsize, problem.dimension))
    population = evaluate_batch(problem, initial, 0, recorder, attributes)
    evaluations = popsize
    generation = 0
    while evaluations < budget:
        n = min(popsize, budget - evaluations)
        decisions = algorithm.reproduce(population, n, rng)
        offspring = evaluate_batch(problem, decisions, evaluations, recorder, attributes)
        evaluations += n
        population = algorithm.step(population, offspring, rng)
        generation += 1
        logger.debug(f"{algorithm.name} generation {generation}: {evaluations}/{budget} evaluations")
    return population
