"""Keyed random number streams.

Every random draw in the package comes from a generator keyed by the run seed
plus a tuple of integers naming the consumer (stream id, node, segment, ...),
so a consumer's draws never depend on how many draws other consumers made.
"""

from __future__ import annotations

import numpy as np

# Stream ids, one per consumer
STREAM_NETWORK = 1
STREAM_SVD_START = 2
STREAM_PIECEWISE = 3
STREAM_THINNING = 4


def make_rng(seed: int, *key: int) -> np.random.Generator:
    """Create a counter-based generator for ``(seed, *key)``.

    Args:
        seed: Run seed (non-negative)
        *key: Non-negative integers identifying the consumer

    Returns:
        A Philox-backed numpy Generator
    """
    sequence = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(sequence))


def as_generator(seed: int | np.random.Generator, *key: int) -> np.random.Generator:
    """Return ``seed`` unchanged when it already is a Generator, else key a new one."""
    if isinstance(seed, np.random.Generator):
        return seed
    return make_rng(seed, *key)
