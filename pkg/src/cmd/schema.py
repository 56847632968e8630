#!/usr/bin/env python3
"""Print the JSON Schema that every command validates its config against.

Usage:
    python -m src.cmd.schema > run_config.schema.json
"""

from __future__ import annotations

import argparse
import json
import logging

from src.cmd.common import run_command, setup_logging
from src.config.models.run_config import RunConfig

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the schema command."""
    return argparse.ArgumentParser(prog="schema", description="Print the run config JSON Schema")


def schema(args: argparse.Namespace) -> None:
    """Print the schema to stdout."""
    print(json.dumps(RunConfig.model_json_schema(), indent=2, sort_keys=True))


def main(argv: list[str] | None = None) -> int:
    """Run the schema command."""
    setup_logging()
    return run_command(build_parser(), argv, schema, logger)


if __name__ == "__main__":
    raise SystemExit(main())
