#!/usr/bin/env python3
"""Command-line tool for scoring a fitted model against ground truth.

Writes ``metrics.json`` with the MISE over the configured pair patch, the
subspace error when the ranks agree, and an optional baseline comparison.

Usage:
    python -m src.cmd.evaluate --model model/ --truth sim/truth.json
    python -m src.cmd.evaluate --model model/ --truth sim/truth.json \\
        --input sim/events.csv --compare hist,kde --bins 64 --bandwidth 0.05
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from src.cmd.common import (
    add_common_arguments,
    dataset_defaults,
    load_run_config,
    load_stream,
    log_summary,
    require,
    resolve_estimation,
    run_command,
    setup_logging,
)
from src.config.configuration import CONFIG
from src.pipelines.evaluation.evaluation_pipeline import EvaluationPipeline, relative_scores
from src.repos.artifacts.ground_truth_repository import GroundTruthRepository
from src.repos.artifacts.model_bundle_repository import ModelBundleRepository
from src.repos.artifacts.report_repository import ReportRepository

logger = logging.getLogger(__name__)


def parse_kinds(text: str) -> list[str]:
    """Parse ``"hist,kde"`` into baseline kinds."""
    kinds = [item.strip() for item in text.split(",") if item.strip()]
    for kind in kinds:
        if kind not in ("hist", "kde"):
            raise argparse.ArgumentTypeError(f"unknown baseline {kind!r}, expected hist or kde")
    return kinds


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the evaluate command."""
    parser = argparse.ArgumentParser(
        prog="evaluate",
        description="Compute MISE of a fitted model (and baselines) against ground truth",
    )
    add_common_arguments(parser)
    parser.add_argument("--compare", type=parse_kinds, help="Baselines to compare: hist,kde")
    parser.add_argument(
        "--own-subspace",
        action="store_true",
        help="Baselines estimate their own subspace from histogram coefficients",
    )
    parser.add_argument("--patch-size", type=int, help="Nodes in the MISE pair patch")
    parser.add_argument("--quad-points", type=int, help="Midpoint quadrature points")
    return parser


def evaluate(args: argparse.Namespace) -> None:
    """Score the bundle and write metrics.json."""
    baselines = None
    if args.compare:
        baselines = [{"kind": kind, "own_subspace": args.own_subspace} for kind in args.compare]
    run = load_run_config(
        args, baselines=baselines, patch_size=args.patch_size, quad_points=args.quad_points
    )
    truth_path = Path(require(run.truth, "--truth"))
    truth = GroundTruthRepository(truth_path.parent, logger=logger).load(truth_path)
    model = ModelBundleRepository(require(run.model, "--model"), logger=logger).load()

    stream = load_stream(run, logger)[0] if run.baselines else None
    evaluation = CONFIG.get_evaluation_config()
    pipeline = EvaluationPipeline(
        truth,
        patch_size=run.patch_size or evaluation.patch_size,
        quad_points=run.quad_points or evaluation.quad_points,
        logger=logger,
    )
    result = pipeline.run(
        model,
        stream=stream,
        baselines=run.baselines,
        defaults=dataset_defaults(run),
        include_self_loops=resolve_estimation(run).include_self_loops,
        seed=run.seed,
    )
    path = ReportRepository(run.out, logger=logger).save_metrics(dict(result))

    summary: dict[str, object] = {
        "Pairs": result["n_pairs"],
        "MISE": f"{result['mise']:.6g}",
        "Subspace error": result["subspace_error"],
    }
    for kind, ratio in relative_scores(result).items():
        summary[f"{kind} / model MISE"] = f"{ratio:.3f}"
    summary["Output"] = path
    log_summary(logger, "EVALUATION RESULT", summary)


def main(argv: list[str] | None = None) -> int:
    """Run the evaluate command."""
    setup_logging()
    return run_command(build_parser(), argv, evaluate, logger)


if __name__ == "__main__":
    raise SystemExit(main())
