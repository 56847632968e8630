"""Model built from a known ground truth instead of from events."""

from __future__ import annotations

import numpy as np

from src.algorithms.affinity.coefficients import AffinityCoefficients
from src.algorithms.affinity.scope import scope_scaling_exclusion
from src.algorithms.affinity.threshold import threshold_affinity
from src.algorithms.basis.evaluation import evaluate_matrix
from src.models.basis import BasisSet
from src.models.intensity import GroundTruth
from src.models.intensity_model import IntensityModel
from src.models.subspace_estimate import SubspaceEstimate
from src.utils.quadrature import midpoint_grid

# Exact for dyadic breakpoints and Haar levels up to 16
ORACLE_QUAD_POINTS = 2**16


def oracle_model(
    truth: GroundTruth, basis: BasisSet, quad_points: int = ORACLE_QUAD_POINTS
) -> IntensityModel:
    """Project the true affinity density onto ``basis`` using the true subspace.

    The result is a linear model (no coefficient is zeroed) and reproduces the
    truth exactly when every breakpoint lies on the quadrature grid and the
    basis resolves it.
    """
    grid = midpoint_grid(quad_points)
    sizes = truth.block_sizes.astype(np.float64)
    density = truth.block_values(grid) * np.sqrt(np.outer(sizes, sizes))[:, :, None]
    values = evaluate_matrix(basis, grid)
    s_hat = np.einsum("bg,deg->bde", values, density) / quad_points

    u_true = truth.u_true
    subspace = SubspaceEstimate(
        u_hat=u_true, singular_values=np.linalg.svd(u_true, compute_uv=False)
    )
    affinity = threshold_affinity(
        AffinityCoefficients(s_hat=s_hat, var_hat=np.zeros_like(s_hat)),
        scope_scaling_exclusion(basis),
        alpha=1.0,
    )
    return IntensityModel(subspace=subspace, affinity=affinity, basis=basis, thresholded=False)
