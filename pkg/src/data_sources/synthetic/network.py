"""Event streams sampled from a community ground truth."""

from __future__ import annotations

import logging

import numpy as np

from src.models.event_stream import EventStream
from src.models.intensity import GroundTruth
from src.utils.random_streams import STREAM_NETWORK, make_rng

logger = logging.getLogger(__name__)


def generate_network(truth: GroundTruth, seed: int = 0) -> EventStream:
    """Sample independent Poisson processes for every ordered pair ``u != v``.

    Source node u draws from its own keyed stream ``(seed, u)``, so the events
    of a row do not depend on the other rows. Within a row, counts for all
    targets of one community are drawn per segment of the block rate.

    Args:
        truth: Ground truth
        seed: Run seed

    Returns:
        Directed, normalized EventStream sorted by time
    """
    n = truth.n_nodes
    members = [np.flatnonzero(truth.assignment == q) for q in range(truth.n_blocks)]
    sources: list[np.ndarray] = []
    targets: list[np.ndarray] = []
    times: list[np.ndarray] = []

    for u in range(n):
        rng = make_rng(seed, STREAM_NETWORK, u)
        p = int(truth.assignment[u])
        for q in range(truth.n_blocks):
            block_targets = members[q][members[q] != u]
            if block_targets.size == 0:
                continue
            for start, end, rate in truth.block_intensities[(p, q)].segments():
                if rate == 0.0:
                    continue
                counts = rng.poisson(rate * (end - start), size=block_targets.size)
                total = int(counts.sum())
                if total == 0:
                    continue
                sources.append(np.full(total, u, dtype=np.int64))
                targets.append(np.repeat(block_targets, counts))
                times.append(rng.uniform(start, end, size=total))

    if not times:
        logger.info(f"Generated an empty {truth.model} network on {n} nodes")
        return EventStream.empty(n)

    all_times = np.concatenate(times)
    order = np.argsort(all_times, kind="stable")
    stream = EventStream(
        n_nodes=n,
        horizon=1.0,
        sources=np.concatenate(sources)[order],
        targets=np.concatenate(targets)[order],
        times=all_times[order],
    )
    logger.info(f"Generated {stream.n_events} events for a {truth.model} network on {n} nodes")
    return stream
