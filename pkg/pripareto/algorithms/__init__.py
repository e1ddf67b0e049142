# -*- coding: utf-8 -*-#
"""The six optimizers and their registry."""
from __future__ import annotations

from typing import Any, Dict, Mapping, Optional, Type

from pripareto.algorithms.base import Algorithm
from pripareto.algorithms.grea import Grea
from pripareto.algorithms.ibea import Ibea
from pripareto.algorithms.msops2 import Msops2
from pripareto.algorithms.nsga2 import Nsga2
from pripareto.algorithms.nsga3 import Nsga3
from pripareto.algorithms.theta_dea import ThetaDea
from pripareto.conceptual.error import ConfigurationError
from pripareto.conceptual.variation import VariationConfig

ALGORITHMS: Dict[str, Type[Algorithm]] = {
    cls.name: cls for cls in (Nsga2, Nsga3, Grea, ThetaDea, Ibea, Msops2)
}


def create_algorithm(
    identifier: str,
    variation: Optional[VariationConfig] = None,
    hyperparameters: Optional[Mapping[str, Any]] = None,
) -> Algorithm:
    """
    Instantiate an algorithm by identifier
    :param identifier: one of ALGORITHMS
    :param variation: variation settings
    :param hyperparameters: algorithm specific settings
    :return: Algorithm
    :raises ConfigurationError: unknown identifier or hyperparameter
    """
    if identifier not in ALGORITHMS:
        raise ConfigurationError(
            f"unknown algorithm {identifier}, expected one of {', '.join(ALGORITHMS)}"
        )
    try:
        return ALGORITHMS[identifier](variation, **dict(hyperparameters or {}))
    except TypeError as e:
        raise ConfigurationError(f"invalid hyperparameters for {identifier}: {e}") from e
