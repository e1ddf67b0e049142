# -*- coding: utf-8 -*-#
"""Radar waveform model: PRI vectors, ambiguity folding, blindness and the nine objectives."""
from pripareto.physical.model import (
    N_OBJECTIVES,
    OBJECTIVE_NAMES,
    ObjectiveVector,
    RadarProblem,
    evaluate,
    is_realistic,
    model_config_hash,
)
from pripareto.physical.radar import (
    DEFAULT_EVALUATION,
    DEFAULT_RADAR,
    EvaluationConfig,
    PriVector,
    RadarParams,
    dwell_time,
    quantize,
)
