"""Pointwise evaluation of basis functions and their squares."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from src.algorithms.basis.haar import dyadic_cell
from src.errors import DomainError
from src.models.basis import BasisFunction, BasisKind, BasisSet


def check_unit_interval(t: NDArray[np.float64] | float) -> NDArray[np.float64]:
    """Return ``t`` as a float array, rejecting points outside [0, 1].

    Raises:
        DomainError: If any point is outside [0, 1] or not finite
    """
    points = np.asarray(t, dtype=np.float64)
    if points.size and (
        not np.all(np.isfinite(points)) or points.min() < 0.0 or points.max() > 1.0
    ):
        raise DomainError(
            f"time points must lie in [0, 1], got range [{points.min()}, {points.max()}]"
        )
    return points


def _haar_sign(function: BasisFunction, points: NDArray[np.float64]) -> NDArray[np.float64]:
    """+1 on the left half of the support, -1 on the right half, 0 elsewhere."""
    if function.kind is BasisKind.HAAR_SCALING:
        return np.ones_like(points)
    assert function.scale is not None and function.location is not None
    halves = dyadic_cell(points, function.scale + 1)
    sign = np.zeros_like(points)
    sign[halves == 2 * function.location] = 1.0
    sign[halves == 2 * function.location + 1] = -1.0
    return sign


def evaluate(function: BasisFunction, t: NDArray[np.float64] | float) -> NDArray[np.float64]:
    """Exact value of ``phi^b`` at each time point.

    Args:
        function: Basis function
        t: Scalar or array of points in [0, 1]

    Returns:
        Array of the same shape as ``t``

    Raises:
        DomainError: If any point is outside [0, 1]
    """
    points = check_unit_interval(t)
    if function.is_haar:
        return np.asarray(function.amplitude * _haar_sign(function, points))
    assert function.evaluator is not None
    return np.asarray(function.evaluator(points), dtype=np.float64).reshape(points.shape)


def evaluate_squared(
    function: BasisFunction, t: NDArray[np.float64] | float
) -> NDArray[np.float64]:
    """Exact value of ``(phi^b)^2`` at each time point.

    For Haar functions this is exactly ``2^j`` on the support of a level-j
    detail and 1 for the scaling function.
    """
    points = check_unit_interval(t)
    if function.is_haar:
        indicator = np.abs(_haar_sign(function, points))
        return np.asarray(function.squared_amplitude * indicator)
    values = evaluate(function, points)
    return np.asarray(values * values)


def evaluate_matrix(basis: BasisSet, t: NDArray[np.float64]) -> NDArray[np.float64]:
    """All basis functions on a set of points, shape (B, n)."""
    points = check_unit_interval(t).reshape(-1)
    if basis.is_haar:
        return _haar_matrix(basis, points)
    return np.vstack([evaluate(function, points) for function in basis.functions])


def evaluate_squared_matrix(basis: BasisSet, t: NDArray[np.float64]) -> NDArray[np.float64]:
    """All squared basis functions on a set of points, shape (B, n)."""
    points = check_unit_interval(t).reshape(-1)
    if basis.is_haar:
        return _haar_matrix(basis, points, squared=True)
    return np.vstack([evaluate_squared(function, points) for function in basis.functions])


def _haar_matrix(
    basis: BasisSet, points: NDArray[np.float64], squared: bool = False
) -> NDArray[np.float64]:
    """Vectorized Haar evaluation (or of the squares), one level at a time."""
    assert basis.max_level is not None
    out = np.zeros((basis.size, points.size), dtype=np.float64)
    out[0] = 1.0
    columns = np.arange(points.size)
    for level in range(basis.max_level):
        function = basis.functions[2**level]
        halves = dyadic_cell(points, level + 1)
        rows = 2**level + (halves >> 1)
        if squared:
            out[rows, columns] = function.squared_amplitude
        else:
            out[rows, columns] = np.where(halves & 1, -function.amplitude, function.amplitude)
    return out
