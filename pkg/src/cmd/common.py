"""Shared plumbing for the command-line tools.

Every command follows the same flow: parse flags, merge them over the JSON
config file, validate the result against ``RunConfig``, run one pipeline and
map failures to exit codes (0 success, 2 usage, 3 data, 4 numeric, 1 anything
unexpected).
"""

from __future__ import annotations

import argparse
import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from src.algorithms.basis.descriptors import basis_from_descriptor
from src.config.configuration import CONFIG
from src.config.models.estimation import EstimationConfig, NumericsConfig
from src.config.models.evaluation import DatasetDefaults
from src.config.models.run_config import RunConfig
from src.data_sources.edge_list.csv_events import CsvEventSource
from src.data_sources.synthetic.synthetic_source import SyntheticEventSource
from src.errors import AnieError, ParameterError, SchemaError
from src.models.basis import BasisSet
from src.models.event_stream import EventStream

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_DATA = 3


def setup_logging() -> None:
    """Configure root logging at the level named by ANIE_LOG_LEVEL."""
    logging.basicConfig(level=CONFIG.get_log_level(), format=LOG_FORMAT)


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags shared by every command."""
    parser.add_argument("--config", type=Path, help="JSON run configuration (see `main.py schema`)")
    parser.add_argument("--seed", type=int, help="Run seed (default: config value or 0)")
    parser.add_argument("--out", type=str, help="Output directory (default: out)")
    parser.add_argument("--alpha", type=float, help="FDR level in [0, 1]")
    parser.add_argument("--rank", type=int, help="Subspace dimension D")
    parser.add_argument("--levels", type=int, help="Haar resolution J")
    parser.add_argument("--bins", type=int, help="Histogram baseline bin count M")
    parser.add_argument("--bandwidth", type=float, help="Kernel baseline bandwidth h")
    parser.add_argument("--input", type=str, help="Edge-list CSV with u,v,t columns")
    parser.add_argument("--model", type=str, help="Model bundle directory from `fit`")
    parser.add_argument("--truth", type=str, help="Ground-truth JSON from `simulate`")


def read_config_file(path: Path | None) -> dict[str, Any]:
    """Raw JSON of the config file, or an empty dict.

    Raises:
        FileNotFoundError: If the file doesn't exist
        SchemaError: If the file is not a JSON object
    """
    if path is None:
        return {}
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise SchemaError(f"{path} must contain a JSON object")
    return data


def load_run_config(args: argparse.Namespace, **extra: Any) -> RunConfig:
    """Merge command-line flags over the config file and validate.

    Args:
        args: Parsed arguments carrying the common flags
        **extra: Command-specific values; None leaves the file value alone

    Returns:
        Validated RunConfig

    Raises:
        pydantic.ValidationError: If the merged document is invalid
    """
    data = read_config_file(args.config)
    overrides = {
        "seed": args.seed,
        "out": args.out,
        "alpha": args.alpha,
        "rank": args.rank,
        "input": args.input,
        "model": args.model,
        "truth": args.truth,
        **extra,
    }
    data.update({key: value for key, value in overrides.items() if value is not None})

    if args.levels is not None:
        basis = dict(data.get("basis") or {"kind": "haar"})
        if basis.get("kind", "haar") != "haar":
            raise ParameterError("--levels only applies to the haar basis")
        data["basis"] = {**basis, "J": args.levels}

    if args.bins is not None or args.bandwidth is not None:
        baselines = [dict(entry) for entry in data.get("baselines") or []]
        for entry in baselines:
            if args.bins is not None:
                entry["bins"] = args.bins
            if args.bandwidth is not None and entry.get("kind") == "kde":
                entry["bandwidth"] = args.bandwidth
        data["baselines"] = baselines

    return RunConfig.model_validate(data)


def dataset_defaults(run: RunConfig) -> DatasetDefaults | None:
    """Tuned hyperparameters of the run's dataset, if it names one."""
    dataset = run.resolved_dataset()
    return CONFIG.get_dataset_defaults(dataset) if dataset else None


def resolve_estimation(run: RunConfig) -> EstimationConfig:
    """Environment defaults, then dataset defaults, then the run config."""
    estimation = CONFIG.get_estimation_config()
    defaults = dataset_defaults(run)
    if defaults is not None:
        estimation = estimation.with_overrides(
            levels=defaults.levels, rank=defaults.rank, alpha=defaults.alpha
        )
    try:
        return estimation.with_overrides(
            levels=run.basis.J,
            rank=run.rank,
            alpha=run.alpha,
            fdr_method=run.fdr_method,
            exempt_scaling=run.exempt_scaling,
            include_self_loops=run.include_self_loops,
            clamp_negative=run.clamp_negative,
        )
    except ParameterError:
        raise
    except ValueError as e:
        raise ParameterError(str(e)) from e


def resolve_basis(run: RunConfig, estimation: EstimationConfig, numerics: NumericsConfig) -> BasisSet:
    """Basis named by the run's descriptor; Haar J defaults to ``estimation.levels``."""
    return basis_from_descriptor(
        run.basis,
        default_levels=estimation.levels,
        panels=numerics.quadrature_panels,
        max_condition_number=numerics.max_condition_number,
    )


def load_stream(run: RunConfig, logger: logging.Logger) -> tuple[EventStream, CsvEventSource | None]:
    """Event stream from the input CSV, or sampled from the generator.

    Returns:
        Tuple of (stream, CSV source when one was read)

    Raises:
        ParameterError: If the run names neither an input nor a generator
    """
    if run.input is not None:
        source = CsvEventSource(
            run.input,
            n_nodes=run.n_nodes,
            horizon=run.horizon,
            directed=run.directed,
            relabel=run.relabel,
            logger=logger,
        )
        return source.load(), source
    if run.generator is not None:
        return SyntheticEventSource(run.generator, logger=logger).load(), None
    raise ParameterError("need --input or a generator section in the config")


def require(value: str | None, flag: str) -> str:
    """Return a required path option.

    Raises:
        ParameterError: If it is missing
    """
    if value is None:
        raise ParameterError(f"{flag} is required")
    return value


def log_summary(logger: logging.Logger, title: str, rows: dict[str, Any]) -> None:
    """Framed result summary."""
    logger.info("=" * 60)
    logger.info(title)
    logger.info("=" * 60)
    for key, value in rows.items():
        logger.info(f"{key}: {value}")
    logger.info("=" * 60)


def run_command(
    parser: argparse.ArgumentParser,
    argv: list[str] | None,
    body: Callable[[argparse.Namespace], None],
    logger: logging.Logger,
) -> int:
    """Parse arguments, run ``body`` and translate failures to exit codes.

    Returns:
        Process exit code
    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        body(args)
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE
    except AnieError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except FileNotFoundError as e:
        logger.error(str(e))
        return EXIT_DATA
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return EXIT_UNEXPECTED
    return EXIT_OK
