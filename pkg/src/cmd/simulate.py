#!/usr/bin/env python3
"""Command-line tool for sampling a synthetic network.

Writes ``events.csv`` (with its sidecar) and ``truth.json`` to the output
directory.

Usage:
    python -m src.cmd.simulate --generator dsbm --nodes 100 --seed 3 --out runs/dsbm
    python -m src.cmd.simulate --config run.json
"""

from __future__ import annotations

import argparse
import logging

from src.cmd.common import (
    add_common_arguments,
    load_run_config,
    log_summary,
    run_command,
    setup_logging,
)
from src.config.models.run_config import GeneratorConfig
from src.errors import ParameterError
from src.pipelines.simulation.simulation_pipeline import SimulationPipeline
from src.repos.artifacts.ground_truth_repository import GroundTruthRepository
from src.repos.events.event_stream_repository import EventStreamRepository

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the simulate command."""
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Sample an ER-blocks or DSBM network with known ground truth",
    )
    add_common_arguments(parser)
    parser.add_argument("--generator", choices=["er_blocks", "dsbm"], help="Generator model")
    parser.add_argument("--nodes", type=int, help="Number of nodes N")
    return parser


def simulate(args: argparse.Namespace) -> None:
    """Sample the configured generator and save events plus truth."""
    run = load_run_config(args)
    generator = run.generator.model_dump() if run.generator is not None else {}
    if args.generator is not None:
        generator["model"] = args.generator
    if args.nodes is not None:
        generator["n_nodes"] = args.nodes
    if "model" not in generator or "n_nodes" not in generator:
        raise ParameterError("simulate needs a generator model and node count (--generator, --nodes)")
    if args.seed is not None:
        generator["seed"] = args.seed
    config = GeneratorConfig.model_validate(generator)

    pipeline = SimulationPipeline(
        config,
        EventStreamRepository(run.out, logger=logger),
        GroundTruthRepository(run.out, logger=logger),
        logger=logger,
    )
    _, _, result = pipeline.run()
    log_summary(
        logger,
        "SIMULATION RESULT",
        {
            "Model": result["model"],
            "Nodes": result["n_nodes"],
            "Events": result["n_events"],
            "Seed": result["seed"],
            "Events file": result["events_path"],
            "Truth file": result["truth_path"],
        },
    )


def main(argv: list[str] | None = None) -> int:
    """Run the simulate command."""
    setup_logging()
    return run_command(build_parser(), argv, simulate, logger)


if __name__ == "__main__":
    raise SystemExit(main())
