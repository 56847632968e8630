"""Exact samplers for inhomogeneous Poisson processes on [0, 1]."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray

from src.errors import BoundViolationError, ParameterError
from src.models.intensity import PiecewiseConstantIntensity
from src.utils.random_streams import STREAM_PIECEWISE, STREAM_THINNING, as_generator

BOUND_TOLERANCE = 1e-12

RateFunction = Callable[[NDArray[np.float64]], NDArray[np.float64]]


def sample_piecewise(
    intensity: PiecewiseConstantIntensity, seed: int | np.random.Generator = 0
) -> NDArray[np.float64]:
    """Sorted event times of a piecewise-constant Poisson process.

    Each segment of width w and rate lambda gets a Poisson(lambda * w) count of
    uniform points.

    Args:
        intensity: Rate function on [0, 1]
        seed: Seed or an already keyed Generator

    Returns:
        Sorted timestamps
    """
    rng = as_generator(seed, STREAM_PIECEWISE)
    chunks = []
    for start, end, rate in intensity.segments():
        count = rng.poisson(rate * (end - start))
        if count:
            chunks.append(rng.uniform(start, end, size=count))
    if not chunks:
        return np.empty(0, dtype=np.float64)
    return np.sort(np.concatenate(chunks))


def sample_thinning(
    intensity: RateFunction, bound: float, seed: int | np.random.Generator = 0
) -> NDArray[np.float64]:
    """Sorted event times of a bounded-rate process by thinning.

    Candidates from a homogeneous process at rate ``bound`` are kept with
    probability ``intensity(t) / bound``.

    Args:
        intensity: Vectorized rate function on [0, 1]
        bound: Upper bound of the rate
        seed: Seed or an already keyed Generator

    Returns:
        Sorted timestamps

    Raises:
        BoundViolationError: If the rate exceeds the bound at a candidate
    """
    if bound < 0:
        raise ParameterError(f"bound must be non-negative, got {bound}")
    rng = as_generator(seed, STREAM_THINNING)
    count = rng.poisson(bound)
    candidates = np.sort(rng.uniform(0.0, 1.0, size=count))
    if count == 0:
        return candidates
    rates = np.asarray(intensity(candidates), dtype=np.float64)
    if np.any(rates > bound * (1.0 + BOUND_TOLERANCE)):
        raise BoundViolationError(
            f"intensity reaches {rates.max()} above the thinning bound {bound}"
        )
    accept = rng.uniform(0.0, 1.0, size=count) * bound < rates
    return candidates[accept]
