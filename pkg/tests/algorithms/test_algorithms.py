import numpy as np
import pytest

from pripareto.algorithms import ALGORITHMS, create_algorithm
from pripareto.algorithms.base import fill_by_fronts, rank_and_crowding
from pripareto.algorithms.reference import associate, das_dennis
from pripareto.algorithms.nsga3 import niching
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.loop import run_algorithm
from pripareto.conceptual.population import Population
from pripareto.conceptual.support import RandomStream
from tests.helpers import ListRecorder, ToyProblem

SMALL_RUN = {"msops2": {"target_count": 20}}


def random_population(n, m, start, seed):
    generator = np.random.default_rng(seed)
    return Population(
        generator.uniform(500, 1500, (n, 4)), generator.random((n, m)), np.arange(start, start + n)
    )


def test_registry():
    assert sorted(ALGORITHMS) == ["grea", "ibea", "msops2", "nsga2", "nsga3", "theta-dea"]
    with pytest.raises(ConfigurationError):
        create_algorithm("spea2")
    with pytest.raises(ConfigurationError):
        create_algorithm("nsga2", hyperparameters={"kappa": 0.1})


@pytest.mark.parametrize("identifier", sorted(ALGORITHMS))
def test_step_keeps_size_and_selects_existing_individuals(identifier):
    algorithm = create_algorithm(identifier, hyperparameters=SMALL_RUN.get(identifier))
    algorithm.setup(3, 20)
    population = random_population(20, 3, 0, 1)
    offspring = random_population(20, 3, 20, 2)
    combined = population.concat(offspring)
    survivors = algorithm.step(population, offspring, RandomStream(3))
    assert len(survivors) == 20
    assert len(set(survivors.eval_index.tolist())) == 20
    for individual in survivors.individuals():
        assert np.array_equal(individual.f, combined.F[individual.eval_index])
        assert np.array_equal(individual.decision, combined.X[individual.eval_index])


@pytest.mark.parametrize("identifier", sorted(ALGORITHMS))
def test_reproduce_within_bounds(identifier):
    algorithm = create_algorithm(identifier, hyperparameters=SMALL_RUN.get(identifier))
    algorithm.setup(3, 20)
    children = algorithm.reproduce(random_population(20, 3, 0, 4), 15, RandomStream(5))
    assert children.shape == (15, 4)
    assert np.all(children >= 500) and np.all(children <= 1500)


@pytest.mark.parametrize("identifier", sorted(ALGORITHMS))
def test_short_run_on_toy_problem(identifier):
    recorder = ListRecorder()
    algorithm = create_algorithm(identifier, hyperparameters=SMALL_RUN.get(identifier))
    population = run_algorithm(algorithm, ToyProblem(), 20, 70, RandomStream(6), recorder)
    assert len(population) == 20
    assert len(recorder.calls) == 70


@pytest.mark.parametrize("identifier", ["nsga2", "nsga3", "grea", "theta-dea"])
def test_dominated_offspring_never_survive(identifier):
    algorithm = create_algorithm(identifier)
    algorithm.setup(3, 20)
    population = random_population(20, 3, 0, 7)
    offspring = Population(population.X, population.F + 2.0, np.arange(20, 40))
    survivors = algorithm.step(population, offspring, RandomStream(8))
    assert sorted(survivors.eval_index.tolist()) == list(range(20))


def test_nsga3_rejects_small_population():
    with pytest.raises(ConfigurationError):
        create_algorithm("nsga3").setup(9, 50)
    with pytest.raises(ConfigurationError):
        create_algorithm("theta-dea").setup(9, 50)
    create_algorithm("nsga3").setup(9, 100)


def test_fill_by_fronts():
    F = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=float)
    assert fill_by_fronts(F, 3) == ([0, 1, 2], None)
    assert fill_by_fronts(F, 2) == ([0], [1, 2])


def test_rank_and_crowding():
    rank, crowding = rank_and_crowding(np.array([[0, 1], [0.5, 0.5], [1, 0], [1, 1]], dtype=float))
    assert rank.tolist() == [0, 0, 0, 1]
    assert crowding[1] == pytest.approx(2.0)


def test_niching_fills_empty_niches_with_closest_members():
    generator = np.random.default_rng(9)
    directions = das_dennis(3, 2)
    for seed in range(20):
        points = generator.random((12, 3))
        reference, _, distance = associate(points, directions)
        k = len(np.unique(reference))
        picks = niching(k, np.zeros(len(directions)), reference, distance, RandomStream(seed))
        assert len({int(reference[p]) for p in picks}) == k
        for p in picks:
            members = np.flatnonzero(reference == reference[p])
            assert distance[p] == distance[members].min()


def test_niching_prefers_least_crowded_niche():
    reference = np.array([0, 0, 1])
    distance = np.array([0.1, 0.2, 0.3])
    picks = niching(1, np.array([2, 0]), reference, distance, RandomStream(0))
    assert picks == [2]
