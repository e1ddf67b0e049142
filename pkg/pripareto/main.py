#!/usr/bin/env python
# -*- coding: utf-8 -*-#
"""Command line entrypoint: run, merge, metrics, filter and report.

Exit codes: 0 success, 2 usage or configuration error, 3 incompatible model configurations.
"""
import argparse
import logging
import sys
from typing import List, Optional

from pripareto import init_logging
from pripareto.algorithms import ALGORITHMS
from pripareto.conceptual.error import (
    ConfigurationError,
    IncompatibleModelError,
    InvalidArgumentError,
    MalformedRecordError,
)
from pripareto.controllers.analysis import (
    DEFAULT_BINS,
    cmd_filter,
    cmd_merge,
    cmd_metrics,
    cmd_report,
)
from pripareto.controllers.config import build_run_config, model_configs, read_document
from pripareto.controllers.experiment import cmd_run
from pripareto.logical.metrics import DEFAULT_SAMPLES
from pripareto.persistance.store import Store

EXIT_USAGE = 2
EXIT_INCOMPATIBLE = 3


def parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="pripareto",
        description="Many-objective PRI selection experiments for medium PRF radars.",
    )
    root.add_argument("--config", help="JSON configuration document")
    commands = root.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run the optimizers and write logs and ND sets")
    run.add_argument(
        "--algo",
        action="append",
        choices=(*ALGORITHMS, "all"),
        help="algorithm id, repeatable, 'all' for every algorithm",
    )
    run.add_argument("--dim", type=int, help="number of PRIs (default 10)")
    run.add_argument("--pop", type=int, help="population size (default 100)")
    run.add_argument("--evals", type=int, help="evaluations per run (default 100000)")
    run.add_argument("--runs", type=int, help="independent runs (default 10)")
    run.add_argument("--seed", type=int, help="base seed, run i uses seed + i (default 0)")
    run.add_argument("--out", help="output directory (default results)")

    merge = commands.add_parser("merge", help="merge ND sets into the best set")
    merge.add_argument("inputs", nargs="+", help="point-set documents or external PRI files")
    merge.add_argument("--out", required=True, help="best-set document")
    merge.add_argument("--method", choices=("scan", "divide"), default="scan")

    metrics = commands.add_parser("metrics", help="compare ND sets against the best set")
    metrics.add_argument("sets", nargs="+", help="per-algorithm ND set documents")
    metrics.add_argument("--best", required=True, help="best-set document")
    metrics.add_argument("--out", required=True, help="report document (.json, table next to it)")
    metrics.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    metrics.add_argument("--seed", type=int, default=0)
    metrics.add_argument("--realistic", action="store_true", help="scale with the realistic best set")

    filtering = commands.add_parser("filter", help="filter a point set")
    filtering.add_argument("source", help="point-set document")
    filtering.add_argument("--out", required=True, help="filtered point-set document")
    filtering.add_argument("--realistic", action="store_true")
    filtering.add_argument("--dwell-min", type=float, help="ms")
    filtering.add_argument("--dwell-max", type=float, help="ms")
    filtering.add_argument("--closest-to", help="external PRI file of query vectors")
    filtering.add_argument(
        "--best", help="best-set document whose extrema scale closest-to distances (default: the source)"
    )

    report = commands.add_parser("report", help="histogram and boxplot data of the realistic best set")
    report.add_argument("best", help="best-set document")
    report.add_argument("--out", required=True, help="output directory")
    report.add_argument("--bins", type=int, default=DEFAULT_BINS)
    report.add_argument("--subset", help="point-set document selecting the quartile records")
    report.add_argument("--dwell-min", type=float, help="ms")
    report.add_argument("--dwell-max", type=float, help="ms")
    return root


def dispatch(args: argparse.Namespace) -> None:
    document = read_document(args.config)
    params, evaluation = model_configs(document)
    store = Store()
    if args.command == "run":
        config = build_run_config(
            document,
            {
                "algorithms": args.algo,
                "dimension": args.dim,
                "popsize": args.pop,
                "evaluations": args.evals,
                "runs": args.runs,
                "base_seed": args.seed,
                "output": args.out,
            },
        )
        summary = cmd_run(config, Store(config.output))
        for algo, values in summary.items():
            print(
                f"{algo}: {int(values['evaluations'])} evaluations, "
                f"{int(values['nondominated'])} non-dominated, {values['wall_time_s']:.1f}s"
            )
    elif args.command == "merge":
        best = cmd_merge(store, args.inputs, args.out, params, evaluation, args.method)
        print(f"best set: {len(best)} points, {best.metadata.get('candidates', len(best))} candidates")
    elif args.command == "metrics":
        report = cmd_metrics(
            store,
            args.sets,
            args.best,
            args.out,
            samples=args.samples,
            seed=args.seed,
            realistic=args.realistic,
            params=params,
        )
        print(report.table().to_string())
    elif args.command == "filter":
        result = cmd_filter(
            store,
            args.source,
            args.out,
            realistic=args.realistic,
            dwell_min=args.dwell_min,
            dwell_max=args.dwell_max,
            closest_to=args.closest_to,
            best=args.best,
            params=params,
            config=evaluation,
        )
        print(f"{len(result)} records")
    elif args.command == "report":
        written = cmd_report(
            store,
            args.best,
            args.out,
            bins=args.bins,
            subset=args.subset,
            dwell_min=args.dwell_min,
            dwell_max=args.dwell_max,
            params=params,
        )
        for kind, path in written.items():
            print(f"{kind}: {path}")


def main(argv: Optional[List[str]] = None) -> int:
    init_logging()
    logger = logging.getLogger("pripareto.main")
    args = parser().parse_args(argv)
    try:
        dispatch(args)
    except IncompatibleModelError as e:
        logger.error(str(e))
        return EXIT_INCOMPATIBLE
    except (
        ConfigurationError,
        MalformedRecordError,
        InvalidArgumentError,
        OSError,
    ) as e:
        logger.error(str(e))
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
