"""Subspace comparison up to rotation."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from src.errors import ShapeError


def _check_shapes(u_hat: NDArray[np.float64], u: NDArray[np.float64]) -> None:
    if np.shape(u_hat) != np.shape(u) or np.ndim(u) != 2:
        raise ShapeError(f"subspace shapes differ: {np.shape(u_hat)} vs {np.shape(u)}")


def procrustes_rotation(u_hat: NDArray[np.float64], u: NDArray[np.float64]) -> NDArray[np.float64]:
    """Orthogonal Q minimizing ``||U_hat Q - U||``: ``Q = A B^T`` where ``U_hat^T U = A S B^T``."""
    _check_shapes(u_hat, u)
    a, _, b_t = np.linalg.svd(np.asarray(u_hat).T @ np.asarray(u))
    return np.asarray(a @ b_t)


def subspace_error(u_hat: NDArray[np.float64], u: NDArray[np.float64]) -> float:
    """Spectral norm ``||U_hat Q - U||_2`` after Procrustes alignment.

    Args:
        u_hat: Estimated N x D basis with orthonormal columns
        u: Reference N x D basis with orthonormal columns

    Returns:
        The aligned spectral-norm error

    Raises:
        ShapeError: If the shapes differ
    """
    q = procrustes_rotation(u_hat, u)
    return float(np.linalg.norm(np.asarray(u_hat) @ q - np.asarray(u), ord=2))


def projector_distance(u_hat: NDArray[np.float64], u: NDArray[np.float64]) -> float:
    """Spectral norm ``||U_hat U_hat^T - U U^T||_2`` (rotation invariant)."""
    _check_shapes(u_hat, u)
    u_hat = np.asarray(u_hat)
    u = np.asarray(u)
    return float(np.linalg.norm(u_hat @ u_hat.T - u @ u.T, ord=2))
