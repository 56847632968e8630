"""Estimation and numerics configuration models."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

from src.errors import ParameterError

FDR_METHODS = ("bh", "by")


@dataclass(frozen=True)
class EstimationConfig:
    """Settings for one end-to-end fit.

    Attributes:
        levels: Haar resolution J (basis size 2^J)
        rank: Subspace dimension D
        alpha: FDR level; 0 keeps only the scaling coefficients, 1 keeps everything testable
        fdr_method: "bh" (Benjamini-Hochberg) or "by" (Benjamini-Yekutieli)
        exempt_scaling: Never test or zero the Haar scaling coefficient
        include_self_loops: Count u == v events in the coefficient matrices
        scree_count: Number of singular values retained for the scree export
        clamp_negative: Clamp reconstructed intensities at zero
    """

    levels: int = 6
    rank: int = 2
    alpha: float = 0.05
    fdr_method: str = "bh"
    exempt_scaling: bool = True
    include_self_loops: bool = False
    scree_count: int = 20
    clamp_negative: bool = False

    def __post_init__(self) -> None:
        """Validate ranges."""
        if self.levels < 0:
            raise ParameterError(f"levels must be >= 0, got {self.levels}")
        if self.rank < 1:
            raise ParameterError(f"rank must be >= 1, got {self.rank}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ParameterError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.fdr_method not in FDR_METHODS:
            raise ParameterError(
                f"fdr_method must be one of {FDR_METHODS}, got {self.fdr_method!r}"
            )
        if self.scree_count < 1:
            raise ParameterError(f"scree_count must be >= 1, got {self.scree_count}")

    def with_overrides(self, **overrides: Any) -> EstimationConfig:
        """Return a copy with every non-None override applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    @classmethod
    def from_config_data(cls, config_data: dict[str, Any]) -> EstimationConfig:
        """Create EstimationConfig from the "estimation" section of an environment file.

        Args:
            config_data: Raw configuration data

        Returns:
            EstimationConfig instance
        """
        return cls(
            levels=int(config_data["levels"]),
            rank=int(config_data["rank"]),
            alpha=float(config_data["alpha"]),
            fdr_method=str(config_data.get("fdr_method", "bh")),
            exempt_scaling=bool(config_data.get("exempt_scaling", True)),
            include_self_loops=bool(config_data.get("include_self_loops", False)),
            scree_count=int(config_data.get("scree_count", 20)),
            clamp_negative=bool(config_data.get("clamp_negative", False)),
        )


@dataclass(frozen=True)
class NumericsConfig:
    """Tolerances and solver switches for the linear algebra steps."""

    quadrature_panels: int = 2**14
    max_condition_number: float = 1e10
    svd_tolerance: float = 1e-8
    residual_tolerance: float = 1e-6
    dense_svd_threshold: int = 256
    max_iterations: int | None = None

    @classmethod
    def from_config_data(cls, config_data: dict[str, Any]) -> NumericsConfig:
        """Create NumericsConfig from the "numerics" section of an environment file."""
        max_iterations = config_data.get("max_iterations")
        return cls(
            quadrature_panels=int(config_data["quadrature_panels"]),
            max_condition_number=float(config_data["max_condition_number"]),
            svd_tolerance=float(config_data["svd_tolerance"]),
            residual_tolerance=float(config_data["residual_tolerance"]),
            dense_svd_threshold=int(config_data["dense_svd_threshold"]),
            max_iterations=int(max_iterations) if max_iterations is not None else None,
        )
