"""Empirical affinity coefficients and their z-scores."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.errors import ShapeError
from src.models.coeff_set import CoeffSet
from src.models.subspace_estimate import SubspaceEstimate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffinityCoefficients:
    """``S_hat[b] = U^T Y(phi^b) U`` and the plug-in variances, shape (B, D, D)."""

    s_hat: NDArray[np.float64]
    var_hat: NDArray[np.float64]


@dataclass(frozen=True)
class ZScores:
    """Standardized coefficients; entries with zero variance are untestable."""

    z: NDArray[np.float64]
    testable: NDArray[np.bool_]


def affinity_coeffs(coeffs: CoeffSet, subspace: SubspaceEstimate) -> AffinityCoefficients:
    """Compress every coefficient matrix onto the estimated subspace.

    Works on the stored ``(u, v, value)`` triples of each function, so the cost
    is linear in the number of stored entries:

        S_hat[b]_pq   = sum_(u,v) U_up U_vq Y_uv(phi^b)
        var_hat[b]_pq = sum_(u,v) U_up^2 U_vq^2 Y_uv((phi^b)^2)

    Args:
        coeffs: Empirical coefficients
        subspace: Estimated subspace

    Returns:
        AffinityCoefficients

    Raises:
        ShapeError: If the node counts differ
    """
    if coeffs.n_nodes != subspace.n_nodes:
        raise ShapeError(
            f"coefficients have {coeffs.n_nodes} nodes, subspace has {subspace.n_nodes}"
        )
    u = subspace.u_hat
    u_squared = u * u
    shape = (coeffs.n_basis, subspace.rank, subspace.rank)
    s_hat = np.zeros(shape, dtype=np.float64)
    var_hat = np.zeros(shape, dtype=np.float64)

    for b in range(coeffs.n_basis):
        rows, cols, values, sq_values = coeffs.entries(b)
        if rows.size == 0:
            continue
        s_hat[b] = (u[rows].T * values) @ u[cols]
        var_hat[b] = (u_squared[rows].T * sq_values) @ u_squared[cols]

    return AffinityCoefficients(s_hat=s_hat, var_hat=var_hat)


def z_scores(coefficients: AffinityCoefficients) -> ZScores:
    """``z = S_hat / sqrt(var_hat)``; 0 and untestable where the variance is 0."""
    testable = coefficients.var_hat > 0.0
    z = np.zeros_like(coefficients.s_hat)
    np.divide(coefficients.s_hat, np.sqrt(coefficients.var_hat), out=z, where=testable)
    untestable = int(testable.size - np.count_nonzero(testable))
    if untestable:
        logger.debug(f"{untestable} of {testable.size} affinity coefficients have zero variance")
    return ZScores(z=z, testable=testable)
