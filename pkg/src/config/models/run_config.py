"""Published schema for command configuration files.

Every command validates its JSON config against ``RunConfig`` before doing any
work; ``python main.py schema`` prints the JSON Schema.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config.configuration import CONFIG
from src.config.models.synthetic import SyntheticConfig


class BasisDescriptor(BaseModel):
    """Basis selection: the Haar family at level J, or a custom sampled family."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["haar", "custom"] = "haar"
    J: int | None = Field(default=None, ge=0, le=24)
    grid: list[float] | None = None
    values: list[list[float]] | None = None

    @model_validator(mode="after")
    def _check_kind(self) -> BasisDescriptor:
        if self.kind == "haar":
            if self.grid is not None or self.values is not None:
                raise ValueError("haar descriptors take no grid or values")
            return self
        if self.grid is None or self.values is None:
            raise ValueError("custom descriptors need both grid and values")
        if len(self.grid) < 2:
            raise ValueError("custom grid needs at least two points")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:], strict=False)):
            raise ValueError("custom grid must be strictly increasing")
        if self.grid[0] < 0.0 or self.grid[-1] > 1.0:
            raise ValueError("custom grid must lie in [0, 1]")
        if not self.values:
            raise ValueError("custom descriptors need at least one function")
        for row in self.values:
            if len(row) != len(self.grid):
                raise ValueError("every values row must have one sample per grid point")
        return self


class ErBlocksParams(BaseModel):
    """Parameters of the ER-blocks generator."""

    model_config = ConfigDict(extra="forbid")

    scale: float = Field(gt=0.0)
    offset: float = Field(ge=0.0)


class DsbmParams(BaseModel):
    """Parameters of the two-community DSBM generator."""

    model_config = ConfigDict(extra="forbid")

    lambda_intra: float = Field(ge=0.0)
    lambda_inter: float = Field(ge=0.0)
    merge_interval: tuple[float, float]

    @model_validator(mode="after")
    def _check_rates(self) -> DsbmParams:
        if self.lambda_intra < self.lambda_inter:
            raise ValueError("lambda_intra must be >= lambda_inter")
        start, end = self.merge_interval
        if not 0.0 <= start <= end <= 1.0:
            raise ValueError("merge_interval must satisfy 0 <= a <= b <= 1")
        return self


class GeneratorConfig(BaseModel):
    """Synthetic network generator selection."""

    model_config = ConfigDict(extra="forbid")

    model: Literal["er_blocks", "dsbm"]
    n_nodes: int = Field(ge=1)
    seed: int = Field(default=0, ge=0)
    params: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_params(self) -> GeneratorConfig:
        self.typed_params()
        if self.model == "dsbm" and self.n_nodes % 2:
            raise ValueError("dsbm needs an even n_nodes")
        return self

    def typed_params(self, defaults: SyntheticConfig | None = None) -> ErBlocksParams | DsbmParams:
        """Validate ``params`` against the model-specific schema.

        Keys missing from ``params`` are filled from ``defaults``, or from the
        environment's "synthetic" section when none are given.
        """
        synthetic = defaults or CONFIG.get_synthetic_config()
        if self.model == "er_blocks":
            return ErBlocksParams.model_validate({**synthetic.er_blocks_params(), **self.params})
        return DsbmParams.model_validate({**synthetic.dsbm_params(), **self.params})


class BaselineConfig(BaseModel):
    """A fixed-resolution baseline: histogram with M bins or Gaussian KDE with bandwidth h."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["hist", "kde"]
    bins: int | None = Field(default=None, ge=1)
    bandwidth: float | None = Field(default=None, gt=0.0)
    own_subspace: bool = False


class RunConfig(BaseModel):
    """Configuration accepted by every command; command-line flags override it."""

    model_config = ConfigDict(extra="forbid")

    # inputs
    input: str | None = None
    n_nodes: int | None = Field(default=None, ge=1)
    horizon: float | None = Field(default=None, ge=0.0)
    directed: bool = True
    relabel: bool = False
    generator: GeneratorConfig | None = None
    model: str | None = None
    truth: str | None = None

    # estimation
    dataset: Literal["er_blocks", "dsbm"] | None = None
    basis: BasisDescriptor = Field(default_factory=BasisDescriptor)
    rank: int | None = Field(default=None, ge=1)
    alpha: float | None = Field(default=None, ge=0.0, le=1.0)
    fdr_method: Literal["bh", "by"] | None = None
    exempt_scaling: bool | None = None
    include_self_loops: bool | None = None
    clamp_negative: bool | None = None
    seed: int = Field(default=0, ge=0)
    cache_dir: str | None = None

    # evaluation and export
    baselines: list[BaselineConfig] = Field(default_factory=list)
    patch_size: int | None = Field(default=None, ge=1)
    quad_points: int | None = Field(default=None, ge=1)
    source: Literal["raw", "thresholded"] = "thresholded"
    pairs: list[tuple[int, int]] | None = None
    grid_points: int = Field(default=256, ge=1)
    linear: bool = False
    sweep_levels: list[int] | None = None

    out: str = "out"

    def resolved_dataset(self) -> str | None:
        """Dataset whose hyperparameter defaults apply to this run."""
        if self.dataset is not None:
            return self.dataset
        if self.generator is not None:
            return self.generator.model
        return None
