"""Concatenated coefficient matrix ``X = [Y(phi^0)^T | ... | Y(phi^(B-1))^T]``."""

from __future__ import annotations

import numpy as np
from scipy import sparse

from src.models.coeff_set import CoeffSet


def build_x(coeffs: CoeffSet) -> sparse.csr_matrix:
    """Assemble the sparse N x (N*B) matrix whose row v describes node v over all b.

    Column block b holds ``Y(phi^b)^T``, i.e. ``X[v, b*N + u] = Y_uv(phi^b)``.

    Args:
        coeffs: Coefficient set

    Returns:
        CSR matrix; never densified
    """
    n = coeffs.n_nodes
    functions = coeffs.basis_index()
    return sparse.csr_matrix(
        (coeffs.values, (coeffs.cols, functions * n + coeffs.rows)),
        shape=(n, n * coeffs.n_basis),
        dtype=np.float64,
    )
