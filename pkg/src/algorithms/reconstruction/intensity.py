"""Pointwise reconstruction of the fitted intensity.

``Lambda_hat(t) = U S(t) U^T`` with the affinity density
``S(t) = sum_b C[b] phi^b(t)``, where C is the thresholded (or linear)
coefficient stack.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray

from src.algorithms.basis.evaluation import check_unit_interval, evaluate_matrix
from src.errors import ParameterError
from src.models.intensity_model import IntensityModel

PairEvaluator = Callable[[NDArray[np.int64], NDArray[np.float64]], NDArray[np.float64]]


def affinity_density_grid(model: IntensityModel, grid: NDArray[np.float64]) -> NDArray[np.float64]:
    """``S(t)`` for every grid point, shape (G, D, D)."""
    points = check_unit_interval(grid).reshape(-1)
    values = evaluate_matrix(model.basis, points)
    return np.asarray(np.einsum("bg,bde->gde", values, model.coefficients))


def affinity_density(model: IntensityModel, t: float) -> NDArray[np.float64]:
    """D x D affinity density at one time point.

    Raises:
        DomainError: If t is outside [0, 1]
    """
    return affinity_density_grid(model, np.array([t], dtype=np.float64))[0]


def _check_pairs(pairs: NDArray[np.int64], n_nodes: int) -> NDArray[np.int64]:
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= n_nodes):
        raise ParameterError(f"node index out of range for {n_nodes} nodes")
    return pairs


def evaluate_grid(
    model: IntensityModel, pairs: NDArray[np.int64], grid: NDArray[np.float64]
) -> NDArray[np.float64]:
    """Estimated intensity of every pair at every grid point, shape (P, G).

    ``S(t)`` is computed once per grid point and shared across the pairs.

    Args:
        model: Fitted model
        pairs: (P, 2) array of ordered node pairs
        grid: Time points in [0, 1]

    Returns:
        Intensity values; clamped at zero if the model asks for it

    Raises:
        ParameterError: If a node index is out of range
        DomainError: If a grid point is outside [0, 1]
    """
    pairs = _check_pairs(pairs, model.n_nodes)
    densities = affinity_density_grid(model, grid)
    u = model.subspace.u_hat
    values = np.einsum("pd,gde,pe->pg", u[pairs[:, 0]], densities, u[pairs[:, 1]])
    if model.clamp_negative:
        values = np.maximum(values, 0.0)
    return np.asarray(values)


def intensity_at(model: IntensityModel, u: int, v: int, t: float) -> float:
    """``row_u(U) S(t) row_v(U)^T``; may be negative unless the model clamps."""
    return float(evaluate_grid(model, np.array([[u, v]]), np.array([t], dtype=np.float64))[0, 0])


def model_evaluator(model: IntensityModel) -> PairEvaluator:
    """Wrap a model as a ``(pairs, grid) -> values`` callable for the metrics."""

    def _evaluate(pairs: NDArray[np.int64], grid: NDArray[np.float64]) -> NDArray[np.float64]:
        return evaluate_grid(model, pairs, grid)

    return _evaluate
