"""Haar wavelet family on [0, 1].

Index layout: b = 0 is the scaling function ``1_[0,1]``; the detail function
``psi_{j,k}(t) = 2^(j/2) psi(2^j t - k)`` sits at ``b = 2^j + k``. Cells are
left-closed and right-open except that t = 1 belongs to the rightmost cell, so
every time point falls in exactly one cell per level.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from src.algorithms.constants import MAX_HAAR_LEVELS
from src.errors import ParameterError
from src.models.basis import BasisFunction, BasisKind, BasisSet


def haar_index(level: int, location: int) -> int:
    """Basis index of ``psi_{level,location}``."""
    return 2**level + location


def haar_position(index: int) -> tuple[int, int]:
    """Inverse of ``haar_index`` for detail functions (``index >= 1``)."""
    if index < 1:
        raise ParameterError(f"index {index} is not a detail function")
    level = index.bit_length() - 1
    return level, index - 2**level


def dyadic_cell(t: NDArray[np.float64] | float, level: int) -> NDArray[np.int64]:
    """Index k of the level-``level`` cell containing each t."""
    cells = 2**level
    scaled = np.floor(np.asarray(t, dtype=np.float64) * cells).astype(np.int64)
    return np.minimum(scaled, cells - 1)


def haar_basis(levels: int) -> BasisSet:
    """Build the Haar family with ``2^levels`` functions.

    Args:
        levels: Resolution J >= 0

    Returns:
        BasisSet with the scaling function and details for j = 0..J-1

    Raises:
        ParameterError: If J is negative or too large
    """
    if not 0 <= levels <= MAX_HAAR_LEVELS:
        raise ParameterError(f"Haar levels must be in [0, {MAX_HAAR_LEVELS}], got {levels}")

    functions = [BasisFunction(id=0, kind=BasisKind.HAAR_SCALING, support=(0.0, 1.0))]
    for level in range(levels):
        width = 2.0**-level
        for location in range(2**level):
            functions.append(
                BasisFunction(
                    id=haar_index(level, location),
                    kind=BasisKind.HAAR_DETAIL,
                    scale=level,
                    location=location,
                    support=(location * width, (location + 1) * width),
                )
            )
    return BasisSet(
        functions=tuple(functions),
        max_level=levels,
        descriptor={"kind": "haar", "J": levels},
    )
