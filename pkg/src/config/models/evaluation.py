"""Evaluation and per-dataset hyperparameter configuration models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class DatasetDefaults:
    """Hyperparameters tuned per synthetic dataset.

    Attributes:
        name: Dataset key ("er_blocks" or "dsbm")
        levels: Haar resolution J for the adaptive estimator
        rank: Subspace dimension D
        bins: Histogram baseline bin count M
        bandwidth: Kernel baseline bandwidth h
        alpha: FDR level
    """

    name: str
    levels: int
    rank: int
    bins: int
    bandwidth: float
    alpha: float

    @classmethod
    def from_config_data(cls, name: str, config_data: dict[str, Any]) -> DatasetDefaults:
        """Create DatasetDefaults from one entry of the "datasets" section."""
        return cls(
            name=name,
            levels=int(config_data["levels"]),
            rank=int(config_data["rank"]),
            bins=int(config_data["bins"]),
            bandwidth=float(config_data["bandwidth"]),
            alpha=float(config_data["alpha"]),
        )


@dataclass(frozen=True)
class EvaluationConfig:
    """MISE evaluation settings."""

    patch_size: int = 100
    quad_points: int = 4096

    @classmethod
    def from_config_data(cls, config_data: dict[str, Any]) -> EvaluationConfig:
        """Create EvaluationConfig from the "evaluation" section."""
        return cls(
            patch_size=int(config_data["patch_size"]),
            quad_points=int(config_data["quad_points"]),
        )
