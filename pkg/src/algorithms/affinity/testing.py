"""Two-sided normal p-values and step-up FDR control.

The Benjamini-Hochberg rule rejects the k smallest p-values where k is the
largest rank with ``p_(k) <= k * alpha / m``. The Benjamini-Yekutieli variant
divides the line by ``sum_(i<=m) 1/i`` and stays valid under arbitrary
dependence between the tests.
"""

from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray
from scipy import special

from src.errors import ParameterError

logger = logging.getLogger(__name__)

FDR_METHODS = ("bh", "by")


class FdrDecision(NamedTuple):
    """Raw and adjusted p-values plus the retained-coefficient mask."""

    p_raw: NDArray[np.float64]
    p_adj: NDArray[np.float64]
    mask: NDArray[np.bool_]


def two_sided_p_values(z: NDArray[np.float64]) -> NDArray[np.float64]:
    """``2 (1 - Phi(|z|))`` computed as ``erfc(|z| / sqrt 2)`` to keep the tails accurate."""
    return np.asarray(special.erfc(np.abs(np.asarray(z, dtype=np.float64)) / np.sqrt(2.0)))


def _correction(method: str, m: int) -> float:
    if method == "bh":
        return 1.0
    if method == "by":
        return float(np.sum(1.0 / np.arange(1, m + 1)))
    raise ParameterError(f"fdr method must be one of {FDR_METHODS}, got {method!r}")


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ParameterError(f"alpha must be in (0, 1], got {alpha}")


def bh_adjusted_p_values(p_values: NDArray[np.float64], method: str = "bh") -> NDArray[np.float64]:
    """Step-up adjusted p-values, monotone in the raw ones and capped at 1.

    Args:
        p_values: 1-D array of raw p-values
        method: "bh" or "by"

    Returns:
        Adjusted p-values in the input order, never below the raw ones
    """
    p = np.asarray(p_values, dtype=np.float64).reshape(-1)
    m = p.size
    if m == 0:
        return np.empty(0, dtype=np.float64)
    correction = _correction(method, m)
    order = np.argsort(p, kind="stable")
    ranked = p[order] * (m * correction) / np.arange(1, m + 1)
    ranked = np.minimum.accumulate(ranked[::-1])[::-1]

    adjusted = np.empty(m, dtype=np.float64)
    adjusted[order] = np.minimum(ranked, 1.0)
    # p * m / m can round below p
    return np.maximum(adjusted, p)


def benjamini_hochberg(
    p_values: NDArray[np.float64], alpha: float, method: str = "bh"
) -> tuple[NDArray[np.bool_], NDArray[np.float64]]:
    """Apply the step-up rule to one family of p-values.

    Args:
        p_values: 1-D array of raw p-values
        alpha: FDR level in (0, 1]
        method: "bh" or "by"

    Returns:
        Tuple of (rejected, adjusted p-values)

    Raises:
        ParameterError: If alpha is outside (0, 1] or the method is unknown
    """
    _check_alpha(alpha)
    p = np.asarray(p_values, dtype=np.float64).reshape(-1)
    reject = np.zeros(p.size, dtype=bool)
    adjusted = bh_adjusted_p_values(p, method)
    if p.size == 0:
        return reject, adjusted

    m = p.size
    order = np.argsort(p, kind="stable")
    ranks = np.arange(1, m + 1)
    below = p[order] <= ranks * alpha / (m * _correction(method, m))
    if below.any():
        k = int(np.flatnonzero(below)[-1])
        reject[order[: k + 1]] = True
    return reject, adjusted


def fdr_decision(
    z: NDArray[np.float64],
    testable: NDArray[np.bool_],
    tested: NDArray[np.bool_],
    alpha: float,
    method: str = "bh",
) -> FdrDecision:
    """Mask of retained coefficients for a (B, D, D) stack of z-scores.

    The family is every testable entry of every tested function, handled
    jointly. Functions outside the scope keep mask 1 and ``p_adj = p_raw``.
    Untestable entries get ``p = 1`` and mask 0. ``alpha = 0`` rejects nothing.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must be in [0, 1], got {alpha}")
    z = np.asarray(z, dtype=np.float64)
    testable = np.asarray(testable, dtype=bool)
    tested = np.asarray(tested, dtype=bool).reshape(-1)
    if tested.size != z.shape[0]:
        raise ParameterError(f"scope has {tested.size} entries for {z.shape[0]} functions")

    p_raw = np.where(testable, two_sided_p_values(z), 1.0)
    p_adj = p_raw.copy()
    in_scope = np.broadcast_to(tested[:, None, None], z.shape)
    mask = ~in_scope.copy()
    family = testable & in_scope

    m = int(np.count_nonzero(family))
    if m:
        if alpha == 0.0:
            p_adj[family] = bh_adjusted_p_values(p_raw[family], method)
        else:
            reject, adjusted = benjamini_hochberg(p_raw[family], alpha, method)
            mask[family] = reject
            p_adj[family] = adjusted
    logger.info(
        f"FDR ({method}, alpha={alpha}): {int(np.count_nonzero(mask & in_scope))} of {m} tests rejected"
    )
    return FdrDecision(p_raw=p_raw, p_adj=p_adj, mask=mask)


def bh_threshold(
    z: NDArray[np.float64],
    testable: NDArray[np.bool_],
    alpha: float,
    tested: NDArray[np.bool_] | None = None,
    method: str = "bh",
) -> FdrDecision:
    """Benjamini-Hochberg mask over all testable coefficients in scope.

    Args:
        z: (B, D, D) z-scores
        testable: Entries with positive variance
        alpha: FDR level in (0, 1]
        tested: Functions in the testing scope (all when None)
        method: "bh" or "by"

    Returns:
        FdrDecision

    Raises:
        ParameterError: If alpha is outside (0, 1]
    """
    _check_alpha(alpha)
    if tested is None:
        tested = np.ones(np.shape(z)[0], dtype=bool)
    return fdr_decision(z, testable, tested, alpha, method)
