"""Multiscale anomaly profile data model."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.errors import DomainError, ParameterError


class ScoreSource(StrEnum):
    """Coefficients the score is computed from."""

    RAW = "raw"
    THRESHOLDED = "thresholded"


@dataclass(frozen=True)
class AnomalyProfile:
    """Per-scale step functions on the dyadic cells ``I_{j,k}``.

    ``scores[j]`` has ``2^j`` entries, one per cell ``[k 2^-j, (k+1) 2^-j)``.
    """

    scores: tuple[NDArray[np.float64], ...]
    source: ScoreSource = ScoreSource.THRESHOLDED

    def __post_init__(self) -> None:
        """Validate per-scale lengths and non-negativity."""
        frozen = []
        for level, values in enumerate(self.scores):
            array = np.array(values, dtype=np.float64, copy=True).reshape(-1)
            if array.size != 2**level:
                raise ParameterError(f"scale {level} needs {2**level} cells, got {array.size}")
            if np.any(array < 0):
                raise ParameterError("anomaly scores must be non-negative")
            array.setflags(write=False)
            frozen.append(array)
        object.__setattr__(self, "scores", tuple(frozen))

    @property
    def levels(self) -> int:
        """Number of scales."""
        return len(self.scores)

    def value_at(self, level: int, t: NDArray[np.float64] | float) -> NDArray[np.float64]:
        """Scale-``level`` score at each time point.

        Raises:
            ParameterError: If the level is not in the profile
            DomainError: If any point is outside [0, 1] or not finite
        """
        if not 0 <= level < self.levels:
            raise ParameterError(f"level must be in [0, {self.levels}), got {level}")
        points = np.asarray(t, dtype=np.float64)
        if points.size and (
            not np.all(np.isfinite(points)) or points.min() < 0.0 or points.max() > 1.0
        ):
            raise DomainError(
                f"time points must lie in [0, 1], got range [{points.min()}, {points.max()}]"
            )
        cells = np.minimum(np.floor(points * 2**level).astype(np.int64), 2**level - 1)
        return np.asarray(self.scores[level][cells])

    def aggregate(self) -> NDArray[np.float64]:
        """Sum of all scales on the finest dyadic grid."""
        if not self.scores:
            return np.zeros(0, dtype=np.float64)
        finest = self.levels - 1
        total = np.zeros(2**finest, dtype=np.float64)
        for level, values in enumerate(self.scores):
            total += np.repeat(values, 2 ** (finest - level))
        return total

    def to_records(self) -> list[dict[str, Any]]:
        """Rows ``scale, cell_index, t_start, t_end, score`` for CSV export."""
        records: list[dict[str, Any]] = []
        for level, values in enumerate(self.scores):
            width = 2.0**-level
            for k, score in enumerate(values.tolist()):
                records.append(
                    {
                        "scale": level,
                        "cell_index": k,
                        "t_start": k * width,
                        "t_end": (k + 1) * width,
                        "score": score,
                    }
                )
        return records
