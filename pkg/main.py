#!/usr/bin/env python3
"""Entry point dispatching to the command-line tools.

Usage:
    python main.py <command> [options]

Commands:
    simulate     Sample a synthetic network with ground truth
    fit          Fit the adaptive intensity estimator
    reconstruct  Export reconstructed intensities on a time grid
    evaluate     Score a model (and baselines) against ground truth
    anomaly      Multiscale anomaly scores
    sweep        MISE across Haar resolutions
    schema       Print the run config JSON Schema
"""

from __future__ import annotations

import sys
from collections.abc import Callable

from src.cmd import anomaly, evaluate, fit, reconstruct, schema, simulate, sweep
from src.cmd.common import EXIT_USAGE

COMMANDS: dict[str, Callable[[list[str] | None], int]] = {
    "simulate": simulate.main,
    "fit": fit.main,
    "reconstruct": reconstruct.main,
    "evaluate": evaluate.main,
    "anomaly": anomaly.main,
    "sweep": sweep.main,
    "schema": schema.main,
}


def main(argv: list[str] | None = None) -> int:
    """Dispatch ``argv[0]`` to its command."""
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] in ("-h", "--help"):
        print(__doc__)
        return 0
    if not argv or argv[0] not in COMMANDS:
        print(__doc__, file=sys.stderr)
        return EXIT_USAGE
    return COMMANDS[argv[0]](argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
