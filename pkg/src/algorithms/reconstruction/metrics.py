"""Accuracy metrics against a known ground truth."""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import NDArray

from src.algorithms.constants import DEFAULT_PATCH_SIZE, DEFAULT_QUAD_POINTS
from src.algorithms.reconstruction.intensity import PairEvaluator
from src.algorithms.subspace.procrustes import subspace_error
from src.errors import ParameterError
from src.utils.quadrature import midpoint_grid, midpoint_integral

logger = logging.getLogger(__name__)

__all__ = ["mise", "pair_patch", "subspace_error"]

DEFAULT_CHUNK = 1024


def pair_patch(n_nodes: int, patch_size: int = DEFAULT_PATCH_SIZE) -> NDArray[np.int64]:
    """All ordered pairs of the first ``min(n_nodes, patch_size)`` nodes, shape (P, 2)."""
    nodes = min(n_nodes, patch_size)
    if nodes < 1:
        raise ParameterError(f"pair patch is empty (n_nodes={n_nodes}, patch_size={patch_size})")
    first, second = np.meshgrid(np.arange(nodes), np.arange(nodes), indexing="ij")
    return np.column_stack([first.ravel(), second.ravel()]).astype(np.int64)


def mise(
    truth: PairEvaluator,
    estimate: PairEvaluator,
    pairs: NDArray[np.int64],
    quad_points: int = DEFAULT_QUAD_POINTS,
    chunk: int = DEFAULT_CHUNK,
) -> float:
    """Mean over the pairs of ``integral_0^1 (Lambda_uv(t) - Lambda_hat_uv(t))^2 dt``.

    Uses the midpoint rule on ``quad_points`` uniform cells, which is exact for
    piecewise-constant integrands with dyadic breakpoints when ``quad_points``
    is a fine enough power of two.

    Args:
        truth: Ground-truth evaluator
        estimate: Model or baseline evaluator
        pairs: (P, 2) pair patch
        quad_points: Quadrature cells
        chunk: Pairs evaluated per batch

    Returns:
        The mean integrated squared error

    Raises:
        ParameterError: If the patch is empty or quad_points < 1
    """
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if pairs.shape[0] == 0:
        raise ParameterError("MISE needs a nonempty pair patch")
    if quad_points < 1:
        raise ParameterError(f"quad_points must be >= 1, got {quad_points}")
    grid = midpoint_grid(quad_points)

    total = 0.0
    for start in range(0, pairs.shape[0], chunk):
        block = pairs[start : start + chunk]
        difference = truth(block, grid) - estimate(block, grid)
        total += float(np.sum(midpoint_integral(difference * difference, axis=1)))
    value = total / pairs.shape[0]
    logger.debug(f"MISE over {pairs.shape[0]} pairs on {quad_points} points: {value:.6g}")
    return value
