#!/usr/bin/env python3
"""Command-line tool for exporting reconstructed intensities on a time grid.

Writes ``grid.csv`` with columns ``u,v,t,lambda_hat``; times are on the
normalized [0, 1] scale.

Usage:
    python -m src.cmd.reconstruct --model model/ --pairs 0:1,3:7 --grid-points 512
    python -m src.cmd.reconstruct --model model/ --grid midpoint
"""

from __future__ import annotations

import argparse
import logging

import numpy as np
from numpy.typing import NDArray

from src.algorithms.reconstruction.intensity import evaluate_grid
from src.algorithms.reconstruction.metrics import pair_patch
from src.cmd.common import (
    add_common_arguments,
    load_run_config,
    log_summary,
    require,
    run_command,
    setup_logging,
)
from src.repos.artifacts.model_bundle_repository import ModelBundleRepository
from src.repos.artifacts.report_repository import ReportRepository
from src.utils.quadrature import midpoint_grid

logger = logging.getLogger(__name__)

# Pairs exported when none are requested: all ordered pairs of the first nodes
DEFAULT_EXPORT_NODES = 4


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """Parse ``"u:v,u:v"`` into a list of pairs."""
    pairs = []
    for item in text.split(","):
        try:
            u, v = item.strip().split(":")
            pairs.append((int(u), int(v)))
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"invalid pair {item!r}, expected u:v") from e
    return pairs


def time_grid(points: int, kind: str) -> NDArray[np.float64]:
    """Evaluation times: ``points`` equispaced values including both ends, or cell midpoints."""
    if kind == "midpoint":
        return midpoint_grid(points)
    if points == 1:
        return np.zeros(1)
    return np.linspace(0.0, 1.0, points)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the reconstruct command."""
    parser = argparse.ArgumentParser(
        prog="reconstruct",
        description="Evaluate a fitted model for selected node pairs on a time grid",
    )
    add_common_arguments(parser)
    parser.add_argument("--pairs", type=parse_pairs, help="Comma-separated u:v pairs")
    parser.add_argument("--grid-points", type=int, help="Number of time points (default 256)")
    parser.add_argument(
        "--grid", choices=["uniform", "midpoint"], default="uniform", help="Time grid layout"
    )
    return parser


def reconstruct(args: argparse.Namespace) -> None:
    """Evaluate the bundle on the grid and write grid.csv."""
    run = load_run_config(args, pairs=args.pairs, grid_points=args.grid_points)
    model = ModelBundleRepository(require(run.model, "--model"), logger=logger).load()

    if run.pairs:
        pairs = np.asarray(run.pairs, dtype=np.int64)
    else:
        pairs = pair_patch(model.n_nodes, DEFAULT_EXPORT_NODES)
    grid = time_grid(run.grid_points, args.grid)

    values = evaluate_grid(model, pairs, grid)
    path = ReportRepository(run.out, logger=logger).save_grid(pairs, grid, values)
    log_summary(
        logger,
        "RECONSTRUCTION RESULT",
        {
            "Pairs": pairs.shape[0],
            "Grid points": grid.size,
            "Clamped": model.clamp_negative,
            "Thresholded": model.thresholded,
            "Output": path,
        },
    )


def main(argv: list[str] | None = None) -> int:
    """Run the reconstruct command."""
    setup_logging()
    return run_command(build_parser(), argv, reconstruct, logger)


if __name__ == "__main__":
    raise SystemExit(main())
