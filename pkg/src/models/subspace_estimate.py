"""Estimated common subspace data model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.errors import NumericError, ShapeError

ORTHONORMALITY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SubspaceEstimate:
    """N x D matrix with orthonormal columns plus the retained singular values.

    Attributes:
        u_hat: Left singular vectors of the D largest singular values
        singular_values: Leading singular values, non-increasing, at least D of them
        deficient: True when fewer than D singular values are nonzero
        residual: Relative residual of the decomposition check
    """

    u_hat: NDArray[np.float64]
    singular_values: NDArray[np.float64]
    deficient: bool = False
    residual: float = 0.0

    def __post_init__(self) -> None:
        """Freeze arrays and validate orthonormality and ordering."""
        u_hat = np.array(self.u_hat, dtype=np.float64, copy=True)
        sigma = np.array(self.singular_values, dtype=np.float64, copy=True).reshape(-1)
        if u_hat.ndim != 2 or u_hat.shape[1] < 1 or u_hat.shape[1] > u_hat.shape[0]:
            raise ShapeError(f"u_hat must be N x D with 1 <= D <= N, got shape {u_hat.shape}")
        gram = u_hat.T @ u_hat
        deviation = float(np.max(np.abs(gram - np.eye(u_hat.shape[1]))))
        if deviation > ORTHONORMALITY_TOLERANCE:
            raise NumericError(f"u_hat columns are not orthonormal (max deviation {deviation:.3e})")
        if np.any(sigma < 0) or np.any(np.diff(sigma) > 0):
            raise NumericError("singular values must be non-negative and non-increasing")
        u_hat.setflags(write=False)
        sigma.setflags(write=False)
        object.__setattr__(self, "u_hat", u_hat)
        object.__setattr__(self, "singular_values", sigma)

    @property
    def n_nodes(self) -> int:
        """Number of rows N."""
        return int(self.u_hat.shape[0])

    @property
    def rank(self) -> int:
        """Number of columns D."""
        return int(self.u_hat.shape[1])

    @property
    def projector(self) -> NDArray[np.float64]:
        """Dense orthogonal projector ``U U^T``."""
        return np.asarray(self.u_hat @ self.u_hat.T)
