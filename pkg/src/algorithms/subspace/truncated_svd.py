"""Rank-D truncated SVD of the concatenated coefficient matrix."""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import NDArray
from scipy import sparse
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, svds

from src.algorithms.constants import (
    DEFAULT_DENSE_SVD_THRESHOLD,
    DEFAULT_RESIDUAL_TOLERANCE,
    DEFAULT_SCREE_COUNT,
    DEFAULT_SVD_TOLERANCE,
)
from src.errors import ConvergenceError, NumericError, RankError
from src.models.subspace_estimate import SubspaceEstimate
from src.utils.random_streams import STREAM_SVD_START, make_rng

logger = logging.getLogger(__name__)

# Dense LAPACK is used only below this many matrix elements
DENSE_ELEMENT_LIMIT = 2**24

Triplets = tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]


def truncated_svd(
    x: sparse.spmatrix | sparse.sparray | NDArray[np.float64],
    rank: int,
    seed: int = 0,
    scree_count: int = DEFAULT_SCREE_COUNT,
    tolerance: float = DEFAULT_SVD_TOLERANCE,
    residual_tolerance: float = DEFAULT_RESIDUAL_TOLERANCE,
    dense_threshold: int = DEFAULT_DENSE_SVD_THRESHOLD,
    max_iterations: int | None = None,
) -> SubspaceEstimate:
    """Estimate the common subspace from the D leading left singular vectors.

    Small problems use dense LAPACK; larger ones use ARPACK on the sparse
    matrix with a start vector drawn from the seeded stream. Columns are sign
    normalized so the largest-magnitude entry is positive, which makes the
    output deterministic.

    Args:
        x: N x (N*B) matrix
        rank: Subspace dimension D
        seed: Run seed for the iterative solver's start vector
        scree_count: Singular values to retain for the scree export (at least D)
        tolerance: Solver tolerance; singular values below ``tolerance * sigma_1``
            count as zero
        residual_tolerance: Largest accepted ``||X^T U - V S|| / sigma_1``
        dense_threshold: Use dense LAPACK when ``min(X.shape)`` is at most this
        max_iterations: ARPACK iteration cap (None for the solver default)

    Returns:
        SubspaceEstimate with ``u_hat`` of shape (N, D)

    Raises:
        RankError: If D < 1 or D > N
        ConvergenceError: If ARPACK does not converge
        NumericError: If the residual check fails
    """
    x = sparse.csr_matrix(x, dtype=np.float64)
    n_rows, n_cols = x.shape
    if not 1 <= rank <= n_rows:
        raise RankError(f"rank must be in [1, {n_rows}] for {n_rows} nodes, got {rank}")

    n_values = min(n_rows, n_cols)
    keep = min(max(rank, scree_count), n_values)

    x.eliminate_zeros()
    if x.nnz == 0:
        logger.warning("Coefficient matrix is zero; returning coordinate axes as a deficient subspace")
        return SubspaceEstimate(
            u_hat=np.eye(n_rows)[:, :rank],
            singular_values=np.zeros(keep),
            deficient=True,
        )

    use_dense = keep >= n_values or (
        n_values <= dense_threshold and n_rows * n_cols <= DENSE_ELEMENT_LIMIT
    )
    if use_dense:
        u, sigma, v_t = _dense_triplets(x, keep)
    else:
        u, sigma, v_t = _sparse_triplets(x, keep, seed, tolerance, max_iterations)

    order = np.argsort(-sigma, kind="stable")
    u, sigma, v_t = u[:, order], sigma[order], v_t[order]
    u, v_t = _normalize_signs(u, v_t)

    residual = float(
        np.linalg.norm(x.T @ u[:, :rank] - v_t[:rank].T * sigma[:rank]) / sigma[0]
    )
    if residual > residual_tolerance:
        raise NumericError(
            f"SVD residual {residual:.3e} exceeds tolerance {residual_tolerance:.1e}"
        )

    sigma = np.where(sigma <= tolerance * sigma[0], 0.0, sigma)
    deficient = bool(sigma[rank - 1] == 0.0)
    if deficient:
        nonzero = int(np.count_nonzero(sigma))
        logger.warning(
            f"Coefficient matrix has only {nonzero} nonzero singular values; rank {rank} is deficient"
        )

    logger.debug(
        f"Truncated SVD ({'dense' if use_dense else 'arpack'}): shape {x.shape}, "
        f"rank {rank}, leading values {sigma[: min(keep, 5)].round(4).tolist()}"
    )
    return SubspaceEstimate(
        u_hat=u[:, :rank], singular_values=sigma, deficient=deficient, residual=residual
    )


def _dense_triplets(x: sparse.csr_matrix, keep: int) -> Triplets:
    u, sigma, v_t = np.linalg.svd(x.toarray(), full_matrices=False)
    return u[:, :keep], sigma[:keep], v_t[:keep]


def _sparse_triplets(
    x: sparse.csr_matrix,
    keep: int,
    seed: int,
    tolerance: float,
    max_iterations: int | None,
) -> Triplets:
    v0 = make_rng(seed, STREAM_SVD_START).standard_normal(min(x.shape))
    try:
        u, sigma, v_t = svds(
            x, k=keep, tol=tolerance, v0=v0, maxiter=max_iterations, solver="arpack"
        )
    except ArpackNoConvergence as e:
        raise ConvergenceError(
            "ARPACK did not converge", iterations=max_iterations, converged=len(e.eigenvalues)
        ) from e
    except ArpackError as e:
        raise ConvergenceError(f"ARPACK failed: {e}", iterations=max_iterations) from e
    return np.asarray(u), np.asarray(sigma), np.asarray(v_t)


def _normalize_signs(
    u: NDArray[np.float64], v_t: NDArray[np.float64]
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Flip singular pairs so each column's largest-magnitude entry is positive."""
    pivots = np.argmax(np.abs(u), axis=0)
    signs = np.sign(u[pivots, np.arange(u.shape[1])])
    signs[signs == 0] = 1.0
    return u * signs, v_t * signs[:, None]


def scree(estimate: SubspaceEstimate) -> list[tuple[int, float]]:
    """Retained spectrum as 1-based ``(index, sigma)`` pairs for rank selection."""
    return [(i + 1, float(s)) for i, s in enumerate(estimate.singular_values.tolist())]
