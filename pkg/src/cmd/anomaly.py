#!/usr/bin/env python3
"""Command-line tool for multiscale anomaly scoring of a fitted Haar model.

Writes ``anomaly.csv`` (``scale,cell_index,t_start,t_end,score``) and, when
the events are given, ``activity.csv`` with the raw event volume per cell.

Usage:
    python -m src.cmd.anomaly --model model/
    python -m src.cmd.anomaly --model model/ --source raw --input events.csv
"""

from __future__ import annotations

import argparse
import logging

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
from src.models.anomaly_profile import ScoreSource
from src.pipelines.evaluation.anomaly_pipeline import AnomalyPipeline
from src.repos.artifacts.model_bundle_repository import ModelBundleRepository
from src.repos.artifacts.report_repository import ReportRepository

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the anomaly command."""
    parser = argparse.ArgumentParser(
        prog="anomaly",
        description="Score structural change per dyadic scale from the affinity coefficients",
    )
    add_common_arguments(parser)
    parser.add_argument(
        "--source",
        choices=[source.value for source in ScoreSource],
        help="Coefficients to score (default thresholded)",
    )
    return parser


def anomaly(args: argparse.Namespace) -> None:
    """Score the bundle per scale and write anomaly.csv."""
    run = load_run_config(args, source=args.source)
    model = ModelBundleRepository(require(run.model, "--model"), logger=logger).load()
    stream = None
    if run.input is not None or run.generator is not None:
        stream = load_stream(run, logger)[0]

    pipeline = AnomalyPipeline(ReportRepository(run.out, logger=logger), logger=logger)
    _, result = pipeline.run(
        model,
        ScoreSource(run.source),
        stream=stream,
        include_self_loops=resolve_estimation(run).include_self_loops,
    )
    log_summary(
        logger,
        "ANOMALY RESULT",
        {
            "Source": result["source"],
            "Scales": result["levels"],
            "Peak cell per scale": result["peak_cells"],
            "Activity volume written": result["activity_written"],
            "Output": run.out,
        },
    )


def main(argv: list[str] | None = None) -> int:
    """Run the anomaly command."""
    setup_logging()
    return run_command(build_parser(), argv, anomaly, logger)


if __name__ == "__main__":
    raise SystemExit(main())
