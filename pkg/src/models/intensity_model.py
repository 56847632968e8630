"""Fitted intensity model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.errors import ShapeError
from src.models.affinity_result import AffinityResult
from src.models.basis import BasisSet
from src.models.subspace_estimate import SubspaceEstimate


@dataclass(frozen=True)
class IntensityModel:
    """Subspace, affinity coefficients and basis of one fit.

    The reconstruction is ``U (sum_b C[b] phi^b(t)) U^T`` where C is the
    thresholded coefficient stack, or the raw one when ``thresholded`` is off
    (the linear estimator).
    """

    subspace: SubspaceEstimate
    affinity: AffinityResult
    basis: BasisSet
    thresholded: bool = True
    clamp_negative: bool = False

    def __post_init__(self) -> None:
        """Check that the three parts agree."""
        if self.affinity.rank != self.subspace.rank:
            raise ShapeError(
                f"affinity rank {self.affinity.rank} != subspace rank {self.subspace.rank}"
            )
        if self.affinity.n_basis != self.basis.size:
            raise ShapeError(
                f"affinity has {self.affinity.n_basis} functions, basis has {self.basis.size}"
            )

    @property
    def n_nodes(self) -> int:
        """Number of nodes N."""
        return self.subspace.n_nodes

    @property
    def coefficients(self) -> NDArray[np.float64]:
        """Coefficient stack used by the reconstruction, shape (B, D, D)."""
        return self.affinity.coefficients(self.thresholded)
