"""Synthetic generator configuration model.

The DSBM rates are not published values; they only need intra >> inter with
both equal on the merge interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class SyntheticConfig:
    """Default parameters for the synthetic network generators."""

    er_scale: float = 1.0
    er_offset: float = 0.0
    dsbm_lambda_intra: float = 8.0
    dsbm_lambda_inter: float = 2.0
    dsbm_merge_interval: tuple[float, float] = (0.5, 0.75)

    @classmethod
    def from_config_data(cls, config_data: dict[str, Any]) -> SyntheticConfig:
        """Create SyntheticConfig from the "synthetic" section of an environment file.

        Args:
            config_data: Raw configuration data with "er_blocks" and "dsbm" entries

        Returns:
            SyntheticConfig instance
        """
        er_blocks = config_data["er_blocks"]
        dsbm = config_data["dsbm"]
        start, end = dsbm["merge_interval"]
        return cls(
            er_scale=float(er_blocks["scale"]),
            er_offset=float(er_blocks["offset"]),
            dsbm_lambda_intra=float(dsbm["lambda_intra"]),
            dsbm_lambda_inter=float(dsbm["lambda_inter"]),
            dsbm_merge_interval=(float(start), float(end)),
        )

    def er_blocks_params(self) -> dict[str, Any]:
        """ER-blocks generator params, keyed as in a run config."""
        return {"scale": self.er_scale, "offset": self.er_offset}

    def dsbm_params(self) -> dict[str, Any]:
        """DSBM generator params, keyed as in a run config."""
        return {
            "lambda_intra": self.dsbm_lambda_intra,
            "lambda_inter": self.dsbm_lambda_inter,
            "merge_interval": self.dsbm_merge_interval,
        }
