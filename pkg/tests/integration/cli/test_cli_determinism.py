"""End-to-end command runs are reproducible from the seed."""

from __future__ import annotations

# IMPORTANT: Set environment variables BEFORE importing any src modules
from tests.integration.common_setup import setup_test_environment

setup_test_environment()

from pathlib import Path

import pytest

from main import main as dispatch
from tests.integration.common_setup import scratch_directory

# Carries the wall-clock timestamp and the package version
VOLATILE = {"manifest.json"}


def artifact_bytes(root: Path) -> dict[str, bytes]:
    return {
        str(path.relative_to(root)): path.read_bytes()
        for path in sorted(root.rglob("*"))
        if path.is_file() and path.name not in VOLATILE
    }


@pytest.mark.integration
@pytest.mark.cli
class TestCliDeterminism:
    """simulate then fit, twice."""

    def test_repeated_runs_are_byte_identical(self):
        with scratch_directory() as root:
            sim = root / "sim"
            assert dispatch(["simulate", "--generator", "dsbm", "--nodes", "30", "--seed", "5", "--out", str(sim)]) == 0

            outputs = []
            for run in ("a", "b"):
                out = root / run
                code = dispatch(
                    [
                        "fit", "--input", str(sim / "events.csv"),
                        "--levels", "5", "--rank", "2", "--seed", "5", "--out", str(out),
                    ]
                )
                assert code == 0
                outputs.append(artifact_bytes(out))

            assert outputs[0]
            assert outputs[0] == outputs[1]

    def test_simulation_is_reproducible(self):
        with scratch_directory() as root:
            for run in ("a", "b"):
                args = ["simulate", "--generator", "er_blocks", "--nodes", "20", "--seed", "9", "--out", str(root / run)]
                assert dispatch(args) == 0
            assert artifact_bytes(root / "a") == artifact_bytes(root / "b")
