"""Projection of the event counting measure onto a basis.

``Y_uv(phi^b) = sum over events of pair (u, v) of phi^b(t)``, and likewise for
``(phi^b)^2``. For the Haar family the projection is computed from dyadic
interval counts:

    Y(psi_{j,k}) = 2^(j/2) * (count in I_{j+1,2k} - count in I_{j+1,2k+1})
    Y(psi_{j,k}^2) = 2^j * count in I_{j,k}

which is exact because the counts are integers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.algorithms.basis.evaluation import evaluate_matrix, evaluate_squared_matrix
from src.algorithms.basis.haar import dyadic_cell
from src.errors import DomainError, ParameterError
from src.models.basis import BasisSet
from src.models.coeff_set import CoeffSet
from src.models.event_stream import EventStream

logger = logging.getLogger(__name__)

_MAX_KEY = 2**62


@dataclass(frozen=True)
class IntervalCounts:
    """Per-pair event counts on the level-``level`` dyadic cells.

    Only nonzero counts are stored, sorted by (u, v, cell).
    """

    level: int
    n_nodes: int
    rows: NDArray[np.int64]
    cols: NDArray[np.int64]
    cells: NDArray[np.int64]
    counts: NDArray[np.int64]

    def to_array(self) -> NDArray[np.int64]:
        """Dense (N, N, 2^level) count array; only for small problems."""
        out = np.zeros((self.n_nodes, self.n_nodes, 2**self.level), dtype=np.int64)
        out[self.rows, self.cols, self.cells] = self.counts
        return out

    def pair_counts(self, u: int, v: int) -> NDArray[np.int64]:
        """Counts of pair (u, v) on every cell."""
        out = np.zeros(2**self.level, dtype=np.int64)
        selected = (self.rows == u) & (self.cols == v)
        out[self.cells[selected]] = self.counts[selected]
        return out


def _check_normalized(stream: EventStream) -> None:
    if stream.n_events and (stream.times[0] < 0.0 or stream.times[-1] > 1.0):
        raise DomainError(
            f"timestamps must lie in [0, 1] before projection; got horizon {stream.horizon}. "
            "Rescale the stream first."
        )


def _check_key_range(n_nodes: int, level: int) -> None:
    if n_nodes * n_nodes * 2**level >= _MAX_KEY:
        raise ParameterError(
            f"{n_nodes} nodes at level {level} exceed the 64-bit cell key range"
        )


def interval_counts(
    stream: EventStream, level: int, include_self_loops: bool = False
) -> IntervalCounts:
    """Count each pair's events on the cells ``I_{level,k}``.

    Args:
        stream: Normalized stream
        level: Dyadic level j (2^j cells)
        include_self_loops: Count u == v events

    Returns:
        Sparse IntervalCounts

    Raises:
        DomainError: If timestamps are outside [0, 1]
    """
    if level < 0:
        raise ParameterError(f"level must be >= 0, got {level}")
    _check_normalized(stream)
    _check_key_range(stream.n_nodes, level)

    sources, targets, times = stream.pair_events(include_self_loops)
    n = stream.n_nodes
    key = (sources * n + targets) * 2**level + dyadic_cell(times, level)
    unique_keys, counts = np.unique(key, return_counts=True)
    pair_ids = unique_keys >> level
    return IntervalCounts(
        level=level,
        n_nodes=n,
        rows=pair_ids // n,
        cols=pair_ids % n,
        cells=unique_keys & (2**level - 1),
        counts=counts.astype(np.int64),
    )


def project(
    stream: EventStream, basis: BasisSet, include_self_loops: bool = False
) -> CoeffSet:
    """Compute ``Y(phi^b)`` and ``Y((phi^b)^2)`` for every basis function.

    Args:
        stream: Normalized stream (timestamps in [0, 1])
        basis: Basis on [0, 1]
        include_self_loops: Keep u == v events in the matrices

    Returns:
        CoeffSet with one sparse matrix pair per function

    Raises:
        DomainError: If timestamps are outside [0, 1]
    """
    _check_normalized(stream)
    if not include_self_loops and stream.self_loop_count:
        logger.info(f"Excluding {stream.self_loop_count} self-loop events from the coefficients")

    if basis.is_haar:
        coeffs = _project_haar(stream, basis, include_self_loops)
    else:
        coeffs = _project_generic(stream, basis, include_self_loops)
    logger.debug(f"Projected {stream.n_events} events onto {basis.size} functions: {coeffs.nnz} entries")
    return coeffs


def _assemble(
    n_nodes: int,
    basis: BasisSet,
    blocks: list[tuple[NDArray[np.int64], NDArray[np.int64], NDArray[np.float64], NDArray[np.float64]]],
) -> CoeffSet:
    """Concatenate per-b (pair_id, b, value, sq) blocks already sorted by (b, pair)."""
    if blocks:
        pair_ids = np.concatenate([block[0] for block in blocks])
        functions = np.concatenate([block[1] for block in blocks])
        values = np.concatenate([block[2] for block in blocks])
        sq_values = np.concatenate([block[3] for block in blocks])
    else:
        pair_ids = functions = np.empty(0, dtype=np.int64)
        values = sq_values = np.empty(0, dtype=np.float64)
    per_function = np.bincount(functions, minlength=basis.size)
    return CoeffSet(
        n_nodes=n_nodes,
        n_basis=basis.size,
        basis_hash=basis.descriptor_hash,
        offsets=np.concatenate([[0], np.cumsum(per_function)]),
        rows=pair_ids // n_nodes,
        cols=pair_ids % n_nodes,
        values=values,
        sq_values=sq_values,
    )


def _project_haar(stream: EventStream, basis: BasisSet, include_self_loops: bool) -> CoeffSet:
    assert basis.max_level is not None
    levels = basis.max_level
    n = stream.n_nodes
    _check_key_range(n, levels)

    finest = interval_counts(stream, levels, include_self_loops)
    pair_id = finest.rows * n + finest.cols
    counts = finest.counts.astype(np.float64)
    blocks = []

    # scaling function: total count per pair
    pairs, inverse = np.unique(pair_id, return_inverse=True)
    totals = np.bincount(inverse, weights=counts, minlength=pairs.size)
    blocks.append((pairs, np.zeros(pairs.size, dtype=np.int64), totals, totals.copy()))

    for level in range(levels):
        location = finest.cells >> (levels - level)
        right_half = (finest.cells >> (levels - level - 1)) & 1
        signed = np.where(right_half == 1, -counts, counts)
        key = location * (n * n) + pair_id
        unique_keys, inverse = np.unique(key, return_inverse=True)
        difference = np.bincount(inverse, weights=signed, minlength=unique_keys.size)
        support_count = np.bincount(inverse, weights=counts, minlength=unique_keys.size)
        function = basis.functions[2**level]
        blocks.append(
            (
                unique_keys % (n * n),
                2**level + unique_keys // (n * n),
                function.amplitude * difference,
                function.squared_amplitude * support_count,
            )
        )
    return _assemble(n, basis, blocks)


def _project_generic(stream: EventStream, basis: BasisSet, include_self_loops: bool) -> CoeffSet:
    n = stream.n_nodes
    sources, targets, times = stream.pair_events(include_self_loops)
    pair_id = sources * n + targets
    values = evaluate_matrix(basis, times)
    sq_values = evaluate_squared_matrix(basis, times)

    blocks = []
    for function in basis.functions:
        lo, hi = function.support
        in_support = (times >= lo) & (times <= hi)
        pairs, inverse = np.unique(pair_id[in_support], return_inverse=True)
        blocks.append(
            (
                pairs,
                np.full(pairs.size, function.id, dtype=np.int64),
                np.bincount(inverse, weights=values[function.id, in_support], minlength=pairs.size),
                np.bincount(inverse, weights=sq_values[function.id, in_support], minlength=pairs.size),
            )
        )
    return _assemble(n, basis, blocks)
