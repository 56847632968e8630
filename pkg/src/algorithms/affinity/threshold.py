"""Thresholded affinity coefficients for one fit."""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import NDArray

from src.algorithms.affinity.coefficients import AffinityCoefficients, affinity_coeffs, z_scores
from src.algorithms.affinity.scope import scope_scaling_exclusion
from src.algorithms.affinity.testing import fdr_decision
from src.models.affinity_result import AffinityResult
from src.models.basis import BasisSet
from src.models.coeff_set import CoeffSet
from src.models.subspace_estimate import SubspaceEstimate

logger = logging.getLogger(__name__)


def threshold_affinity(
    coefficients: AffinityCoefficients,
    tested: NDArray[np.bool_],
    alpha: float,
    method: str = "bh",
) -> AffinityResult:
    """Test every coefficient in scope and zero the ones classified as noise.

    Args:
        coefficients: ``S_hat`` and ``var_hat`` stacks
        tested: Functions in the testing scope, shape (B,)
        alpha: FDR level in [0, 1]; 0 rejects nothing
        method: "bh" or "by"

    Returns:
        AffinityResult
    """
    scores = z_scores(coefficients)
    decision = fdr_decision(scores.z, scores.testable, tested, alpha, method)
    return AffinityResult(
        s_hat=coefficients.s_hat,
        var_hat=coefficients.var_hat,
        z=scores.z,
        testable=scores.testable,
        tested=tested,
        p_raw=decision.p_raw,
        p_adj=decision.p_adj,
        mask=decision.mask,
        alpha=alpha,
        fdr_method=method,
    )


def estimate_affinity(
    coeffs: CoeffSet,
    subspace: SubspaceEstimate,
    basis: BasisSet,
    alpha: float,
    method: str = "bh",
    exempt_scaling: bool = True,
) -> AffinityResult:
    """Compress, standardize and threshold in one call."""
    tested = scope_scaling_exclusion(basis, exempt_scaling)
    result = threshold_affinity(affinity_coeffs(coeffs, subspace), tested, alpha, method)
    logger.debug(
        f"Affinity: {result.n_rejections} of {result.n_tests} coefficients kept at alpha={alpha}"
    )
    return result
