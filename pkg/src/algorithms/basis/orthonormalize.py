"""Gram-matrix orthonormalization of arbitrary function families.

Given raw functions ``f_1..f_B`` with Gram matrix ``G``, the functions
``sum_l (G^{-1/2})_{bl} f_l`` are orthonormal. Inner products use the composite
midpoint rule.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from functools import partial

import numpy as np
from numpy.typing import NDArray

from src.algorithms.constants import DEFAULT_MAX_CONDITION_NUMBER, DEFAULT_QUADRATURE_PANELS
from src.errors import IllConditionedBasisError, ParameterError
from src.models.basis import BasisFunction, BasisKind, BasisSet, Evaluator, GramMatrix
from src.utils.quadrature import midpoint_grid

logger = logging.getLogger(__name__)


def sampled_function(
    grid: Sequence[float] | NDArray[np.float64], values: Sequence[float] | NDArray[np.float64]
) -> Evaluator:
    """Piecewise-linear interpolant of samples, constant beyond the grid ends."""
    xs = np.asarray(grid, dtype=np.float64)
    ys = np.asarray(values, dtype=np.float64)
    if xs.shape != ys.shape:
        raise ParameterError(f"grid and values differ in shape: {xs.shape} vs {ys.shape}")

    def _evaluate(t: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.asarray(np.interp(t, xs, ys))

    return _evaluate


def sample_family(
    functions: Sequence[Callable[[NDArray[np.float64]], NDArray[np.float64]]],
    points: NDArray[np.float64],
) -> NDArray[np.float64]:
    """Stack the functions evaluated on ``points``, shape (B, n)."""
    return np.vstack([np.asarray(f(points), dtype=np.float64).reshape(-1) for f in functions])


def gram_matrix(
    functions: Sequence[Callable[[NDArray[np.float64]], NDArray[np.float64]]],
    panels: int = DEFAULT_QUADRATURE_PANELS,
) -> GramMatrix:
    """Midpoint-rule Gram matrix ``G_kl = int f_k f_l`` on [0, 1]."""
    samples = sample_family(functions, midpoint_grid(panels))
    return GramMatrix(entries=samples @ samples.T / panels)


def _combination(
    weights: NDArray[np.float64],
    functions: tuple[Callable[[NDArray[np.float64]], NDArray[np.float64]], ...],
    t: NDArray[np.float64],
) -> NDArray[np.float64]:
    points = np.asarray(t, dtype=np.float64)
    return np.asarray(weights @ sample_family(functions, points.reshape(-1))).reshape(points.shape)


def orthonormalize(
    raw: Sequence[Callable[[NDArray[np.float64]], NDArray[np.float64]]],
    panels: int = DEFAULT_QUADRATURE_PANELS,
    max_condition_number: float = DEFAULT_MAX_CONDITION_NUMBER,
    descriptor: dict[str, object] | None = None,
) -> BasisSet:
    """Turn a linearly independent family into an orthonormal BasisSet.

    Args:
        raw: Vectorized functions on [0, 1]
        panels: Midpoint panels for the Gram matrix
        max_condition_number: Largest accepted eigenvalue ratio of G
        descriptor: Descriptor recorded on the result (hashed for caching)

    Returns:
        Generic BasisSet whose b-th function is ``sum_l (G^{-1/2})_{bl} raw_l``

    Raises:
        ParameterError: If ``raw`` is empty
        IllConditionedBasisError: If G is singular or too ill-conditioned
    """
    if not raw:
        raise ParameterError("orthonormalize needs at least one function")
    gram = gram_matrix(raw, panels)
    smallest = gram.smallest_eigenvalue
    if smallest <= 0.0 or gram.condition_number > max_condition_number:
        raise IllConditionedBasisError(
            f"Gram matrix of {len(raw)} functions is ill-conditioned "
            f"(condition number {gram.condition_number:.3e}, cap {max_condition_number:.1e})",
            smallest_eigenvalue=smallest,
        )
    weights = gram.inverse_sqrt()
    logger.debug(
        f"Orthonormalized {len(raw)} functions, condition number {gram.condition_number:.3e}"
    )

    family = tuple(raw)
    functions = tuple(
        BasisFunction(
            id=b,
            kind=BasisKind.GENERIC,
            evaluator=partial(_combination, weights[b].copy(), family),
        )
        for b in range(len(family))
    )
    return BasisSet(functions=functions, max_level=None, descriptor=dict(descriptor or {}))
