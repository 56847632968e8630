"""Ground-truth intensity models for the synthetic experiments."""

from __future__ import annotations

import logging
from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.data_sources.synthetic.constants import CONSTANT, DSBM, ER_BLOCKS, STEP_HEIGHTS, STEP_TIMES
from src.errors import ParameterError
from src.models.intensity import GroundTruth, PiecewiseConstantIntensity

logger = logging.getLogger(__name__)


def raw_er_blocks_steps() -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Edges ``[0, t_1, ..., t_K, 1]`` and the untransformed cumulative values per segment."""
    edges = np.concatenate([[0.0], STEP_TIMES, [1.0]])
    values = np.concatenate([[0.0], np.cumsum(STEP_HEIGHTS)])
    return edges, values


def er_blocks_intensity(scale: float = 1.0, offset: float = 0.0) -> PiecewiseConstantIntensity:
    """The ER-blocks rate ``max(scale * lambda(t) + offset, 0)``.

    Raises:
        ParameterError: If scale <= 0 or offset < 0
    """
    if not scale > 0:
        raise ParameterError(f"scale must be positive, got {scale}")
    if offset < 0:
        raise ParameterError(f"offset must be non-negative, got {offset}")
    edges, raw = raw_er_blocks_steps()
    values = np.maximum(scale * raw + offset, 0.0)
    if np.any(scale * raw + offset < 0):
        logger.debug("ER-blocks rate clamped at zero on its negative segments")
    return PiecewiseConstantIntensity.from_steps(edges.tolist(), values.tolist())


def er_blocks_ground_truth(n_nodes: int, scale: float = 1.0, offset: float = 0.0) -> GroundTruth:
    """Every ordered pair shares the ER-blocks rate: one community, ``U = 1 / sqrt(N)``."""
    return GroundTruth(
        model=ER_BLOCKS,
        assignment=np.zeros(n_nodes, dtype=np.int64),
        block_intensities={(0, 0): er_blocks_intensity(scale, offset)},
        generator={"model": ER_BLOCKS, "n_nodes": n_nodes, "params": {"scale": scale, "offset": offset}},
    )


def constant_ground_truth(n_nodes: int, rate: float) -> GroundTruth:
    """Homogeneous Erdos-Renyi network: every ordered pair has the same constant rate."""
    return GroundTruth(
        model=CONSTANT,
        assignment=np.zeros(n_nodes, dtype=np.int64),
        block_intensities={(0, 0): PiecewiseConstantIntensity.constant(rate)},
        generator={"model": CONSTANT, "n_nodes": n_nodes, "params": {"rate": rate}},
    )


def dsbm_ground_truth(
    n_nodes: int,
    lambda_intra: float = 8.0,
    lambda_inter: float = 2.0,
    merge_interval: tuple[float, float] = (0.5, 0.75),
) -> GroundTruth:
    """Two equal communities whose intra rate drops to the inter rate on the merge interval.

    Nodes ``0..N/2-1`` form community 0, the rest community 1.

    Raises:
        ParameterError: If N is odd, the rates are out of order, or the interval is invalid
    """
    if n_nodes < 2 or n_nodes % 2:
        raise ParameterError(f"dsbm needs an even n_nodes >= 2, got {n_nodes}")
    if lambda_inter < 0 or lambda_intra < lambda_inter:
        raise ParameterError(
            f"need lambda_intra >= lambda_inter >= 0, got {lambda_intra} and {lambda_inter}"
        )
    start, end = merge_interval
    if not 0.0 <= start <= end <= 1.0:
        raise ParameterError(f"merge interval must satisfy 0 <= a <= b <= 1, got {merge_interval}")

    intra = PiecewiseConstantIntensity.from_steps(
        [0.0, start, end, 1.0], [lambda_intra, lambda_inter, lambda_intra]
    )
    inter = PiecewiseConstantIntensity.constant(lambda_inter)
    params: dict[str, Any] = {
        "lambda_intra": lambda_intra,
        "lambda_inter": lambda_inter,
        "merge_interval": [start, end],
    }
    return GroundTruth(
        model=DSBM,
        assignment=np.repeat([0, 1], n_nodes // 2),
        block_intensities={(0, 0): intra, (1, 1): intra, (0, 1): inter, (1, 0): inter},
        generator={"model": DSBM, "n_nodes": n_nodes, "params": params},
    )
