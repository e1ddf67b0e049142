# -*- coding: utf-8 -*-#
"""Serialize and Deserialize pripareto objects to JSON"""
import json
from dataclasses import asdict
from datetime import date, datetime

import numpy as np

from pripareto.conceptual.variation import VariationConfig
from pripareto.logical.archive import EvaluationRecord, PointSet
from pripareto.logical.metrics import AlgorithmMetrics, MetricsReport, ScalingBounds
from pripareto.physical.radar import EvaluationConfig, RadarParams

UNITS = "0.1us"


class PriParetoEncoder(json.JSONEncoder):
    """PriParetoEncoder is a class that is used to serialize pripareto objects to JSON"""

    def default(self, obj):
        """
        Serialize pripareto objects to JSON.
        Floats are written with their shortest round-trip representation.
        :param obj: object to serialize
        :return: JSON object
        """
        if isinstance(obj, (datetime, date)):
            return obj.isoformat()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        if isinstance(obj, (RadarParams, EvaluationConfig, VariationConfig, ScalingBounds)):
            return {"type": type(obj).__name__, **asdict(obj)}
        if isinstance(obj, EvaluationRecord):
            return {
                "type": "EvaluationRecord",
                "run": obj.run,
                "algo": obj.algo,
                "eval": obj.eval_index,
                "x": list(obj.decision),
                "m": list(obj.margins),
                "dwell_ms": obj.dwell_ms,
            }
        if isinstance(obj, PointSet):
            return {
                "type": "PointSet",
                "config_hash": obj.config_hash,
                "units": UNITS,
                "nd_filtered": obj.nd_filtered,
                "metadata": dict(obj.metadata),
                "provenance": [list(p) for p in obj.provenance],
                "records": list(obj.records),
            }
        if isinstance(obj, AlgorithmMetrics):
            return {"type": "AlgorithmMetrics", **obj.__dict__}
        if isinstance(obj, MetricsReport):
            return {
                "type": "MetricsReport",
                "config_hash": obj.config_hash,
                "multipliers": list(obj.multipliers),
                "samples": obj.samples,
                "seed": obj.seed,
                "bounds": obj.bounds,
                "realistic": obj.realistic,
                "best": obj.best,
                "algorithms": list(obj.algorithms),
                "run_seeds": list(obj.run_seeds),
            }
        return super().default(obj)


def _tuples(obj: dict) -> dict:
    return {k: tuple(v) if isinstance(v, list) else v for k, v in obj.items() if k != "type"}


class PriParetoDecoder(json.JSONDecoder):
    def __init__(self, *args, **kwargs):
        super().__init__(object_hook=self.object_hook, *args, **kwargs)

    @staticmethod
    def object_hook(obj):
        if "type" not in obj:
            return obj
        if obj["type"] == "RadarParams":
            return RadarParams(**_tuples(obj))
        if obj["type"] == "EvaluationConfig":
            return EvaluationConfig(**_tuples(obj))
        if obj["type"] == "VariationConfig":
            return VariationConfig(**_tuples(obj))
        if obj["type"] == "ScalingBounds":
            return ScalingBounds(**_tuples(obj))
        if obj["type"] == "EvaluationRecord":
            return EvaluationRecord(
                run=obj["run"],
                algo=obj["algo"],
                eval_index=obj["eval"],
                decision=tuple(obj["x"]),
                margins=tuple(obj["m"]),
                dwell_ms=obj["dwell_ms"],
            )
        if obj["type"] == "PointSet":
            if obj.get("units", UNITS) != UNITS:
                raise ValueError(f"point set declares units {obj['units']}, expected {UNITS}")
            return PointSet(
                records=tuple(obj["records"]),
                config_hash=obj["config_hash"],
                provenance=tuple(tuple(p) for p in obj["provenance"]),
                nd_filtered=obj["nd_filtered"],
                metadata=obj["metadata"],
            )
        if obj["type"] == "AlgorithmMetrics":
            return AlgorithmMetrics(**_tuples(obj))
        if obj["type"] == "MetricsReport":
            return MetricsReport(
                config_hash=obj["config_hash"],
                multipliers=tuple(obj["multipliers"]),
                samples=obj["samples"],
                seed=obj["seed"],
                bounds=obj["bounds"],
                realistic=obj["realistic"],
                best=obj["best"],
                algorithms=tuple(obj["algorithms"]),
                run_seeds=tuple(obj.get("run_seeds", ())),
            )
        return obj
