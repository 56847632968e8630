"""Multiscale anomaly scores from Haar affinity coefficients.

At scale j the score of cell ``I_{j,k}`` is ``sum_pq |S[psi_{j,k}]_pq|``: the
amount of local change in the latent interaction rates around that interval.
"""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import NDArray

from src.algorithms.basis.haar import dyadic_cell
from src.errors import DomainError, ParameterError, UnsupportedBasisError
from src.models.affinity_result import AffinityResult
from src.models.anomaly_profile import AnomalyProfile, ScoreSource
from src.models.basis import BasisSet
from src.models.event_stream import EventStream

logger = logging.getLogger(__name__)


def multiscale_score(
    affinity: AffinityResult,
    basis: BasisSet,
    source: ScoreSource = ScoreSource.THRESHOLDED,
) -> AnomalyProfile:
    """Per-scale anomaly profile.

    Args:
        affinity: Affinity coefficients of a Haar fit
        basis: The Haar basis of that fit
        source: Score the raw ``S_hat`` or the thresholded coefficients

    Returns:
        AnomalyProfile with one step function per detail level

    Raises:
        UnsupportedBasisError: If the basis is not the Haar family
    """
    if not basis.is_haar or basis.max_level is None:
        raise UnsupportedBasisError("anomaly scores need the Haar basis")
    if affinity.n_basis != basis.size:
        raise ParameterError(f"affinity has {affinity.n_basis} functions, basis has {basis.size}")

    coefficients = affinity.coefficients(thresholded=source is ScoreSource.THRESHOLDED)
    totals = np.abs(coefficients).sum(axis=(1, 2))
    scores = tuple(totals[basis.level_slice(level)] for level in range(basis.max_level))
    logger.debug(f"Anomaly profile ({source}) over {basis.max_level} scales")
    return AnomalyProfile(scores=scores, source=source)


def activity_volume(
    stream: EventStream, level: int, include_self_loops: bool = False
) -> NDArray[np.int64]:
    """Event count on each level-``level`` dyadic cell of a normalized stream."""
    if level < 0:
        raise ParameterError(f"level must be >= 0, got {level}")
    if not stream.is_normalized:
        raise DomainError(f"activity volume needs a normalized stream, got horizon {stream.horizon}")
    _, _, times = stream.pair_events(include_self_loops)
    return np.bincount(dyadic_cell(times, level), minlength=2**level).astype(np.int64)
