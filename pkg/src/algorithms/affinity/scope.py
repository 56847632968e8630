"""Which basis functions enter the multiple-testing family."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from src.models.basis import BasisKind, BasisSet


def scope_scaling_exclusion(basis: BasisSet, exempt_scaling: bool = True) -> NDArray[np.bool_]:
    """Testing scope with the Haar scaling function left out.

    Keeping the scaling coefficient untested makes ``alpha = 0`` reconstruct
    the constant mean-rate intensity. Generic bases have no scaling function,
    so every function is tested.

    Args:
        basis: Basis of the fit
        exempt_scaling: Set False to test the scaling coefficient too

    Returns:
        Boolean array of shape (B,), True for tested functions
    """
    tested = np.ones(basis.size, dtype=bool)
    if exempt_scaling:
        for function in basis.functions:
            if function.kind is BasisKind.HAAR_SCALING:
                tested[function.id] = False
    return tested
