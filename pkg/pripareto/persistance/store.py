# -*- coding: utf-8 -*-#
"""File storage: evaluation logs, point-set documents, metric reports and external PRI files."""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd  # type: ignore

from pripareto.conceptual.decorators import instrument_class_function
from pripareto.conceptual.error import MalformedRecordError
from pripareto.logical.archive import EvaluationRecord, PointSet
from pripareto.logical.metrics import MetricsReport
from pripareto.persistance.serialize import PriParetoDecoder, PriParetoEncoder
from pripareto.physical.model import N_MARGINS, evaluate, model_config_hash
from pripareto.physical.radar import (
    DEFAULT_EVALUATION,
    DEFAULT_RADAR,
    EvaluationConfig,
    RadarParams,
)

FLOAT_FORMAT = "%.17g"
TICKS_PER_UNIT = {"0.1us": 1, "us": 10}


def log_columns(dimension: int) -> List[str]:
    return (
        ["run", "algo", "eval"]
        + [f"x{i}" for i in range(1, dimension + 1)]
        + [f"m{i}" for i in range(1, N_MARGINS + 1)]
        + ["dwell_ms"]
    )


def _metadata_line(metadata: Mapping[str, Any]) -> str:
    def text(value: Any) -> str:
        if isinstance(value, (list, tuple)):
            return ",".join(str(v) for v in value)
        return str(value)

    return "# " + " ".join(f"{k}={text(v)}" for k, v in metadata.items()) + "\n"


def _comment_block(path: Path) -> Tuple[Dict[str, str], int]:
    metadata: Dict[str, str] = {}
    lines = 0
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("#"):
                break
            lines += 1
            for item in line[1:].split():
                key, _, value = item.partition("=")
                metadata[key] = value
    return metadata, lines


class Store:
    """Store is a class that is used to store and load pipeline artifacts under a root directory."""

    def __init__(self, root: Optional[Path | str] = None) -> None:
        """
        Initialize the store
        :param root: directory relative paths resolve against, the working directory by default
        :return: None
        """
        self.root = Path(root) if root is not None else Path(".")

    def path(self, name: Path | str) -> Path:
        name = Path(name)
        return name if name.is_absolute() else self.root / name

    def _writable(self, name: Path | str) -> Path:
        path = self.path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    @instrument_class_function(name="write_log", level=logging.DEBUG)
    def write_log(
        self,
        records: Sequence[EvaluationRecord],
        name: Path | str,
        metadata: Optional[Mapping[str, Any]] = None,
    ) -> Path:
        """
        Write an evaluation log, one record per line, floats with 17 significant digits.
        :param records: records of one run, all of the same dimension
        :param name: file name
        :param metadata: key=value pairs written to a leading comment line
        :return: path written
        """
        dimension = len(records[0].decision) if records else 0
        rows = [
            [r.run, r.algo, r.eval_index, *r.decision, *r.margins, r.dwell_ms] for r in records
        ]
        frame = pd.DataFrame(rows, columns=log_columns(dimension))
        path = self._writable(name)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            if metadata:
                handle.write(_metadata_line(metadata))
            frame.to_csv(handle, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        return path

    @instrument_class_function(name="read_log", level=logging.DEBUG)
    def read_log(self, name: Path | str) -> Tuple[List[EvaluationRecord], Dict[str, str]]:
        """
        Read an evaluation log.
        :param name: file name
        :return: (records, comment metadata)
        :raises MalformedRecordError: bad header or row, with its line number
        """
        path = self.path(name)
        metadata, skip = _comment_block(path)
        try:
            frame = pd.read_csv(path, skiprows=skip, dtype=str, keep_default_na=False)
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise MalformedRecordError(str(e), path=str(path)) from e
        columns = list(frame.columns)
        dimension = sum(1 for c in columns if c.startswith("x"))
        if columns != log_columns(dimension):
            raise MalformedRecordError(
                f"unexpected header {','.join(columns)}", line=skip + 1, path=str(path)
            )
        records = []
        for position, row in enumerate(frame.itertuples(index=False, name=None)):
            line = skip + 2 + position
            try:
                values = row[3:]
                decision = [float(v) for v in values[:dimension]]
                if any(not v.is_integer() for v in decision):
                    raise ValueError("decision values must be integer ticks")
                records.append(
                    EvaluationRecord(
                        run=int(row[0]),
                        algo=row[1],
                        eval_index=int(row[2]),
                        decision=tuple(int(v) for v in decision),
                        margins=tuple(float(v) for v in values[dimension : dimension + N_MARGINS]),
                        dwell_ms=float(values[-1]),
                    )
                )
            except ValueError as e:
                raise MalformedRecordError(str(e), line=line, path=str(path)) from e
        return records, metadata

    @instrument_class_function(name="save_point_set", level=logging.DEBUG)
    def save_point_set(self, S: PointSet, name: Path | str) -> Path:
        path = self._writable(name)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(S, handle, cls=PriParetoEncoder)
        return path

    @instrument_class_function(name="load_point_set", level=logging.DEBUG)
    def load_point_set(self, name: Path | str) -> PointSet:
        """
        Load a point-set document
        :param name: file name
        :return: PointSet, its metadata carries the path it was read from
        :raises MalformedRecordError: the document is not a point set
        """
        path = self.path(name)
        try:
            with open(path, "r", encoding="utf-8") as handle:
                S = json.load(handle, cls=PriParetoDecoder)
        except (json.JSONDecodeError, ValueError, TypeError, KeyError) as e:
            raise MalformedRecordError(str(e), path=str(path)) from e
        if not isinstance(S, PointSet):
            raise MalformedRecordError("document is not a point set", path=str(path))
        return S.subset(range(len(S)), metadata={**S.metadata, "path": str(path)})

    def save_report(self, report: MetricsReport, name: Path | str) -> Path:
        """
        Write a metrics report document and its table next to it (.csv).
        :param report: metrics report
        :param name: file name of the document
        :return: path of the document
        """
        path = self._writable(name)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(report, handle, cls=PriParetoEncoder, indent=2)
        self.save_frame(
            report.table(),
            path.with_suffix(".csv"),
            {"config_hash": report.config_hash, "seed": report.seed, "seeds": report.run_seeds},
            index=True,
        )
        return path

    def load_report(self, name: Path | str) -> MetricsReport:
        with open(self.path(name), "r", encoding="utf-8") as handle:
            return json.load(handle, cls=PriParetoDecoder)

    def save_json(self, document: Any, name: Path | str) -> Path:
        path = self._writable(name)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(document, handle, cls=PriParetoEncoder, indent=2)
        return path

    def load_json(self, name: Path | str) -> Any:
        with open(self.path(name), "r", encoding="utf-8") as handle:
            return json.load(handle, cls=PriParetoDecoder)

    def save_frame(
        self,
        frame: pd.DataFrame,
        name: Path | str,
        metadata: Optional[Mapping[str, Any]] = None,
        index: bool = False,
    ) -> Path:
        """
        Write a delimited table, preceded by a comment line of key=value pairs when metadata is given.
        :param frame: table
        :param name: file name
        :param metadata: pairs of the comment line
        :param index: write the row labels
        :return: path written
        """
        path = self._writable(name)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            if metadata:
                handle.write(_metadata_line(metadata))
            frame.to_csv(handle, index=index, float_format=FLOAT_FORMAT, lineterminator="\n")
        return path

    def read_metadata(self, name: Path | str) -> Dict[str, str]:
        """Key=value pairs of the leading comment lines of a delimited file."""
        return _comment_block(self.path(name))[0]

    @instrument_class_function(name="import_pris", level=logging.INFO)
    def import_pris(
        self,
        name: Path | str,
        params: RadarParams = DEFAULT_RADAR,
        config: EvaluationConfig = DEFAULT_EVALUATION,
        algo: Optional[str] = None,
    ) -> PointSet:
        """
        Import external PRI vectors and evaluate them. The first line declares the unit, `unit=0.1us` or
        `unit=us`; every further line holds one comma-separated PRI vector. The file holds decisions only:
        records get run 0, eval_index is the position in the file and provenance names the file.
        :param name: file name
        :param params: radar characteristics
        :param config: evaluation granularity
        :param algo: algorithm id of the records, the file stem by default
        :return: PointSet
        :raises MalformedRecordError: missing unit, unit mismatch or bad row, with its line number
        """
        path = self.path(name)
        algo = algo or path.stem
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
        header = lines[0].strip().replace(" ", "") if lines else ""
        key, _, unit = header.partition("=")
        if key != "unit" or unit not in TICKS_PER_UNIT:
            raise MalformedRecordError(
                "first line must declare unit=0.1us or unit=us", line=1, path=str(path)
            )
        factor = TICKS_PER_UNIT[unit]
        records = []
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                values = np.array([float(v) for v in line.split(",")]) * factor
            except ValueError as e:
                raise MalformedRecordError(str(e), line=number, path=str(path)) from e
            ticks = np.round(values)
            if np.any(np.abs(values - ticks) > 1e-6):
                raise MalformedRecordError(
                    f"values are not whole multiples of {params.pri_quantum * 1e6:g} us",
                    line=number,
                    path=str(path),
                )
            if np.any(ticks < params.lower_ticks) or np.any(ticks > params.upper_ticks):
                raise MalformedRecordError(
                    f"values outside [{params.lower_ticks}, {params.upper_ticks}] ticks, "
                    f"check the declared unit {unit}",
                    line=number,
                    path=str(path),
                )
            decision = tuple(int(t) for t in ticks)
            objectives = evaluate(decision, params, config)
            records.append(
                EvaluationRecord(0, algo, len(records), decision, objectives.margins, objectives.dwell)
            )
        return PointSet(
            tuple(records),
            model_config_hash(params, config),
            tuple((f"file:{path.name}",) for _ in records),
            metadata={"path": str(path), "units": unit},
        )

    def export_pris(self, S: PointSet, name: Path | str, unit: str = "0.1us") -> Path:
        """
        Write the decision vectors of a point set as PRIs in the given unit. Objectives and run provenance
        are not written, importing the file evaluates the decisions again.
        :param S: point set
        :param name: file name
        :param unit: 0.1us or us
        :return: path written
        """
        if unit not in TICKS_PER_UNIT:
            raise ValueError(f"unknown unit {unit}")
        factor = TICKS_PER_UNIT[unit]
        path = self._writable(name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(f"unit={unit}\n")
            for record in S.records:
                handle.write(",".join(_format_ticks(t, factor) for t in record.decision) + "\n")
        return path


def _format_ticks(ticks: int, factor: int) -> str:
    if factor == 1:
        return str(ticks)
    whole, rest = divmod(ticks, factor)
    return f"{whole}.{rest}" if rest else str(whole)

