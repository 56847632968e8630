#!/usr/bin/env python3
"""Command-line tool for sweeping the Haar resolution J.

Fits the linear and thresholded estimators at each level and writes
``sweep.csv`` (``levels,mise_linear,mise_thresholded``).

Usage:
    python -m src.cmd.sweep --input sim/events.csv --truth sim/truth.json --sweep-levels 2,4,6,8
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from src.cmd.common import (
    add_common_arguments,
    load_run_config,
    load_stream,
    log_summary,
    require,
    resolve_estimation,
    run_command,
    setup_logging,
)
from src.config.configuration import CONFIG
from src.errors import ParameterError
from src.pipelines.estimation.level_sweep_pipeline import LevelSweepPipeline
from src.pipelines.evaluation.evaluation_pipeline import EvaluationPipeline
from src.repos.artifacts.ground_truth_repository import GroundTruthRepository
from src.repos.artifacts.report_repository import ReportRepository

logger = logging.getLogger(__name__)


def parse_levels(text: str) -> list[int]:
    """Parse ``"2,4,6"`` into levels."""
    try:
        return [int(item) for item in text.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid level list {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the sweep command."""
    parser = argparse.ArgumentParser(
        prog="sweep",
        description="MISE of the linear and thresholded estimators across Haar levels",
    )
    add_common_arguments(parser)
    parser.add_argument("--sweep-levels", type=parse_levels, help="Comma-separated levels J")
    return parser


def sweep(args: argparse.Namespace) -> None:
    """Fit every requested level and write sweep.csv."""
    run = load_run_config(args, sweep_levels=args.sweep_levels)
    if run.basis.kind != "haar":
        raise ParameterError("the level sweep uses the haar basis")
    if not run.sweep_levels:
        raise ParameterError("sweep needs --sweep-levels")

    truth_path = Path(require(run.truth, "--truth"))
    truth = GroundTruthRepository(truth_path.parent, logger=logger).load(truth_path)
    stream = load_stream(run, logger)[0]

    evaluation = CONFIG.get_evaluation_config()
    pipeline = LevelSweepPipeline(
        resolve_estimation(run),
        EvaluationPipeline(
            truth,
            patch_size=run.patch_size or evaluation.patch_size,
            quad_points=run.quad_points or evaluation.quad_points,
            logger=logger,
        ),
        CONFIG.get_numerics_config(),
        seed=run.seed,
        logger=logger,
    )
    rows = pipeline.run(stream, run.sweep_levels)
    path = ReportRepository(run.out, logger=logger).save_sweep([dict(row) for row in rows])

    summary: dict[str, object] = {
        f"J={row['levels']}": (
            f"linear {row['mise_linear']:.6g}, thresholded {row['mise_thresholded']:.6g}"
        )
        for row in rows
    }
    summary["Output"] = path
    log_summary(logger, "LEVEL SWEEP RESULT", summary)


def main(argv: list[str] | None = None) -> int:
    """Run the sweep command."""
    setup_logging()
    return run_command(build_parser(), argv, sweep, logger)


if __name__ == "__main__":
    raise SystemExit(main())
