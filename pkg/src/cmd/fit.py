#!/usr/bin/env python3
"""Command-line tool for fitting the adaptive intensity estimator.

Writes the model bundle (subspace, scree, affinity coefficients, mask, basis
descriptor and manifest) to the output directory.

Usage:
    python -m src.cmd.fit --input events.csv --rank 2 --levels 6 --out model/
    python -m src.cmd.fit --config run.json --alpha 0.1
    python -m src.cmd.fit --input events.csv --linear
"""

from __future__ import annotations

import argparse
import logging

from src.cmd.common import (
    add_common_arguments,
    load_run_config,
    load_stream,
    log_summary,
    resolve_basis,
    resolve_estimation,
    run_command,
    setup_logging,
)
from src.config.configuration import CONFIG
from src.pipelines.estimation.fit_pipeline import FitPipeline
from src.repos.artifacts.coefficient_cache_repository import CoefficientCacheRepository
from src.repos.artifacts.model_bundle_repository import ModelBundleRepository
from src.repos.artifacts.report_repository import ReportRepository

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the fit command."""
    parser = argparse.ArgumentParser(
        prog="fit",
        description="Estimate the low-rank intensity of a dynamic network",
    )
    add_common_arguments(parser)
    parser.add_argument(
        "--linear",
        action="store_true",
        default=None,
        help="Keep every coefficient (no FDR thresholding)",
    )
    parser.add_argument("--cache-dir", type=str, help="Directory for cached coefficients")
    return parser


def fit(args: argparse.Namespace) -> None:
    """Fit the model and write the bundle."""
    run = load_run_config(args, linear=args.linear, cache_dir=args.cache_dir)
    estimation = resolve_estimation(run)
    numerics = CONFIG.get_numerics_config()
    basis = resolve_basis(run, estimation, numerics)
    stream, source = load_stream(run, logger)

    cache_repo = CoefficientCacheRepository(run.cache_dir, logger=logger) if run.cache_dir else None
    pipeline = FitPipeline(
        basis,
        estimation,
        numerics,
        seed=run.seed,
        thresholded=not run.linear,
        cache_repo=cache_repo,
        logger=logger,
    )
    outcome = pipeline.run(stream)

    bundle = ModelBundleRepository(run.out, logger=logger)
    bundle.save(outcome.model, config=run.model_dump(mode="json"))
    if source is not None and source.relabel_map:
        ReportRepository(run.out, logger=logger).save_relabel_map(source.relabel_map)

    result = outcome.result
    log_summary(
        logger,
        "FIT RESULT",
        {
            "Nodes": result["n_nodes"],
            "Events": result["n_events"],
            "Basis size": result["basis_size"],
            "Rank": result["rank"],
            "Tests": result["n_tests"],
            "Rejections": result["n_rejections"],
            "Rank deficient": result["deficient"],
            "Coefficient cache hit": result["cache_hit"],
            "Output": run.out,
        },
    )


def main(argv: list[str] | None = None) -> int:
    """Run the fit command."""
    setup_logging()
    return run_command(build_parser(), argv, fit, logger)


if __name__ == "__main__":
    raise SystemExit(main())
