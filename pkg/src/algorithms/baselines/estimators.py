"""Fixed-resolution baselines: a naive per-pair estimate denoised by projection.

The naive estimate ``Lambda_tilde(t)`` is either a histogram with M uniform
bins or a Gaussian kernel estimate with reflection at 0 and 1. The baseline is
``U U^T Lambda_tilde(t) U U^T``, computed through the D x D core
``U^T Lambda_tilde(t) U`` from the pairs that have events.
"""

from __future__ import annotations

import hashlib
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray
from scipy import sparse, stats

from src.algorithms.basis.evaluation import check_unit_interval
from src.algorithms.constants import (
    DEFAULT_DENSE_SVD_THRESHOLD,
    DEFAULT_SCREE_COUNT,
    KERNEL_TRUNCATION,
)
from src.algorithms.subspace.concatenation import build_x
from src.algorithms.subspace.truncated_svd import truncated_svd
from src.errors import ParameterError, ShapeError
from src.models.coeff_set import CoeffSet
from src.models.event_stream import EventStream
from src.models.subspace_estimate import SubspaceEstimate

logger = logging.getLogger(__name__)


class BaselineKind(StrEnum):
    """Naive estimator family."""

    HIST = "hist"
    KDE = "kde"


class NaiveEstimator(ABC):
    """Per-pair intensity estimate built directly from the events.

    Pairs without events have the zero estimate; ``active_pairs`` lists the
    others sorted by ``u * N + v``.
    """

    def __init__(self, stream: EventStream, include_self_loops: bool = False) -> None:
        if not stream.is_normalized:
            raise ParameterError(f"baselines need a normalized stream, got horizon {stream.horizon}")
        self.n_nodes = stream.n_nodes
        sources, targets, times = stream.pair_events(include_self_loops)
        pair_ids = sources * self.n_nodes + targets
        order = np.argsort(pair_ids, kind="stable")
        self._pair_ids, starts = np.unique(pair_ids[order], return_index=True)
        self._times = np.split(times[order], starts[1:]) if self._pair_ids.size else []

    @property
    @abstractmethod
    def kind(self) -> BaselineKind:
        """Estimator family."""

    @property
    def active_pairs(self) -> NDArray[np.int64]:
        """(P, 2) pairs with at least one event."""
        return np.column_stack(
            [self._pair_ids // self.n_nodes, self._pair_ids % self.n_nodes]
        ).astype(np.int64)

    @abstractmethod
    def _evaluate_times(self, times: NDArray[np.float64], grid: NDArray[np.float64]) -> NDArray[np.float64]:
        """Estimate from one pair's sorted event times on the grid."""

    def evaluate_pairs(
        self, pairs: NDArray[np.int64], grid: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Naive estimate of every pair at every grid point, shape (P, G)."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        points = check_unit_interval(grid).reshape(-1)
        out = np.zeros((pairs.shape[0], points.size), dtype=np.float64)
        if self._pair_ids.size == 0:
            return out
        wanted = pairs[:, 0] * self.n_nodes + pairs[:, 1]
        position = np.clip(np.searchsorted(self._pair_ids, wanted), 0, self._pair_ids.size - 1)
        for row in np.flatnonzero(self._pair_ids[position] == wanted):
            out[row] = self._evaluate_times(self._times[position[row]], points)
        return out

    def matrix_at(self, t: float) -> sparse.csr_matrix:
        """Sparse N x N naive estimate at one time point."""
        pairs = self.active_pairs
        values = self.evaluate_pairs(pairs, np.array([t], dtype=np.float64))[:, 0]
        return sparse.csr_matrix(
            (values, (pairs[:, 0], pairs[:, 1])), shape=(self.n_nodes, self.n_nodes)
        )

    def core(self, u_hat: NDArray[np.float64], grid: NDArray[np.float64]) -> NDArray[np.float64]:
        """``U^T Lambda_tilde(t) U`` for every grid point, shape (G, D, D)."""
        if u_hat.shape[0] != self.n_nodes:
            raise ShapeError(f"subspace has {u_hat.shape[0]} rows for {self.n_nodes} nodes")
        pairs = self.active_pairs
        values = self.evaluate_pairs(pairs, grid)
        return np.asarray(
            np.einsum("pd,pg,pe->gde", u_hat[pairs[:, 0]], values, u_hat[pairs[:, 1]])
        )


class HistogramEstimator(NaiveEstimator):
    """``M * count`` of the bin containing t; t = 1 falls in the last bin."""

    def __init__(self, stream: EventStream, bins: int, include_self_loops: bool = False) -> None:
        if bins < 1:
            raise ParameterError(f"histogram needs at least one bin, got {bins}")
        super().__init__(stream, include_self_loops)
        self.bins = bins
        self._counts = [np.bincount(self.bin_of(times), minlength=bins) for times in self._times]

    @property
    def kind(self) -> BaselineKind:
        return BaselineKind.HIST

    def bin_of(self, t: NDArray[np.float64]) -> NDArray[np.int64]:
        """Bin index ``min(floor(t M), M - 1)``."""
        return np.minimum(np.floor(np.asarray(t) * self.bins).astype(np.int64), self.bins - 1)

    def _evaluate_times(self, times: NDArray[np.float64], grid: NDArray[np.float64]) -> NDArray[np.float64]:
        counts = np.bincount(self.bin_of(times), minlength=self.bins)
        return np.asarray(self.bins * counts[self.bin_of(grid)], dtype=np.float64)

    def bin_counts(self) -> NDArray[np.int64]:
        """(P_active, M) event counts in ``active_pairs`` order."""
        if not self._counts:
            return np.zeros((0, self.bins), dtype=np.int64)
        return np.vstack(self._counts).astype(np.int64)


class KernelEstimator(NaiveEstimator):
    """Gaussian kernel sum with mirror images at ``-tau`` and ``2 - tau``.

    Kernel terms beyond ``KERNEL_TRUNCATION`` bandwidths are dropped.
    """

    def __init__(self, stream: EventStream, bandwidth: float, include_self_loops: bool = False) -> None:
        if not bandwidth > 0.0:
            raise ParameterError(f"bandwidth must be positive, got {bandwidth}")
        super().__init__(stream, include_self_loops)
        self.bandwidth = bandwidth

    @property
    def kind(self) -> BaselineKind:
        return BaselineKind.KDE

    def _evaluate_times(self, times: NDArray[np.float64], grid: NDArray[np.float64]) -> NDArray[np.float64]:
        images = np.sort(np.concatenate([times, -times, 2.0 - times]))
        reach = KERNEL_TRUNCATION * self.bandwidth
        lo = np.searchsorted(images, grid - reach, side="left")
        hi = np.searchsorted(images, grid + reach, side="right")
        out = np.zeros(grid.size, dtype=np.float64)
        for i in np.flatnonzero(hi > lo):
            out[i] = np.sum(stats.norm.pdf(grid[i] - images[lo[i] : hi[i]], scale=self.bandwidth))
        return out


def ipp_hist(stream: EventStream, bins: int, include_self_loops: bool = False) -> HistogramEstimator:
    """Histogram naive estimator with ``bins`` uniform bins."""
    return HistogramEstimator(stream, bins, include_self_loops)


def ipp_kde(stream: EventStream, bandwidth: float, include_self_loops: bool = False) -> KernelEstimator:
    """Reflected Gaussian-kernel naive estimator."""
    return KernelEstimator(stream, bandwidth, include_self_loops)


def project_low_rank(
    naive: NaiveEstimator, subspace: SubspaceEstimate, t: float
) -> NDArray[np.float64]:
    """Dense N x N projected estimate ``U (U^T Lambda_tilde(t) U) U^T``.

    Raises:
        ShapeError: If the subspace and the estimator disagree on N
    """
    u = subspace.u_hat
    core = naive.core(u, np.array([t], dtype=np.float64))[0]
    return np.asarray(u @ core @ u.T)


def box_coefficients(stream: EventStream, bins: int, include_self_loops: bool = False) -> CoeffSet:
    """Coefficients on the orthonormal box basis ``sqrt(M) 1_{bin m}``.

    ``Y(phi^m) = sqrt(M) * count`` and ``Y((phi^m)^2) = M * count``.
    """
    estimator = HistogramEstimator(stream, bins, include_self_loops)
    pairs = estimator.active_pairs
    counts = estimator.bin_counts()
    bin_index, pair_index = np.nonzero(counts.T)
    per_bin = np.bincount(bin_index, minlength=bins)
    chosen = counts.T[bin_index, pair_index].astype(np.float64)
    return CoeffSet(
        n_nodes=stream.n_nodes,
        n_basis=bins,
        basis_hash=hashlib.sha256(f"box:{bins}".encode()).hexdigest(),
        offsets=np.concatenate([[0], np.cumsum(per_bin)]),
        rows=pairs[pair_index, 0],
        cols=pairs[pair_index, 1],
        values=np.sqrt(bins) * chosen,
        sq_values=bins * chosen,
    )


def histogram_subspace(
    stream: EventStream,
    bins: int,
    rank: int,
    seed: int = 0,
    include_self_loops: bool = False,
    scree_count: int = DEFAULT_SCREE_COUNT,
    dense_threshold: int = DEFAULT_DENSE_SVD_THRESHOLD,
) -> SubspaceEstimate:
    """Subspace estimated from the histogram coefficient matrices instead of the wavelet ones."""
    coeffs = box_coefficients(stream, bins, include_self_loops)
    return truncated_svd(
        build_x(coeffs), rank, seed=seed, scree_count=scree_count, dense_threshold=dense_threshold
    )


@dataclass(frozen=True)
class BaselineModel:
    """A naive estimator paired with the subspace used to denoise it."""

    naive: NaiveEstimator
    subspace: SubspaceEstimate

    def __post_init__(self) -> None:
        """Check that N agrees."""
        if self.naive.n_nodes != self.subspace.n_nodes:
            raise ShapeError(
                f"estimator has {self.naive.n_nodes} nodes, subspace has {self.subspace.n_nodes}"
            )

    @property
    def kind(self) -> BaselineKind:
        """Estimator family."""
        return self.naive.kind

    def evaluate_grid(
        self, pairs: NDArray[np.int64], grid: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """Projected estimate of every pair at every grid point, shape (P, G)."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        u = self.subspace.u_hat
        core = self.naive.core(u, grid)
        return np.asarray(np.einsum("pd,gde,pe->pg", u[pairs[:, 0]], core, u[pairs[:, 1]]))

    def matrix_at(self, t: float) -> NDArray[np.float64]:
        """Dense N x N projected estimate at one time point."""
        return project_low_rank(self.naive, self.subspace, t)
