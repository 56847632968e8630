"""End-to-end fit: project, estimate the subspace, test and threshold.

The pipeline:
1. Rescales the stream to [0, 1]
2. Projects the events onto the basis (or reuses cached coefficients)
3. Estimates the common subspace by truncated SVD of the concatenated matrix
4. Compresses the coefficients onto the subspace and thresholds them with FDR control
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TypedDict

from src.algorithms.affinity.threshold import estimate_affinity
from src.algorithms.coefficients.projection import project
from src.algorithms.subspace.concatenation import build_x
from src.algorithms.subspace.truncated_svd import truncated_svd
from src.config.models.estimation import EstimationConfig, NumericsConfig
from src.models.basis import BasisSet
from src.models.coeff_set import CoeffSet
from src.models.event_stream import EventStream
from src.models.intensity_model import IntensityModel
from src.models.subspace_estimate import SubspaceEstimate
from src.repos.artifacts.coefficient_cache_repository import CoefficientCacheRepository
from src.services.events.rescaling import rescale


class FitResult(TypedDict):
    """Summary of one fit."""

    n_nodes: int
    n_events: int
    basis_size: int
    rank: int
    n_tests: int
    n_rejections: int
    deficient: bool
    cache_hit: bool


@dataclass(frozen=True)
class FitOutcome:
    """Everything a fit produced."""

    model: IntensityModel
    coefficients: CoeffSet
    stream: EventStream
    result: FitResult


class FitPipeline:
    """Fits the thresholded (or linear) intensity estimator to one stream."""

    def __init__(
        self,
        basis: BasisSet,
        estimation: EstimationConfig,
        numerics: NumericsConfig | None = None,
        seed: int = 0,
        thresholded: bool = True,
        cache_repo: CoefficientCacheRepository | None = None,
        logger: logging.Logger | None = None,
    ) -> None:
        """Initialize fit pipeline.

        Args:
            basis: Orthonormal basis on [0, 1]
            estimation: Rank, FDR level and related settings
            numerics: Solver tolerances (defaults when None)
            seed: Run seed for the iterative SVD start vector
            thresholded: False fits the linear estimator (no coefficient is zeroed)
            cache_repo: Optional coefficient cache
            logger: Logger instance (optional)
        """
        self.basis = basis
        self.estimation = estimation
        self.numerics = numerics or NumericsConfig()
        self.seed = seed
        self.thresholded = thresholded
        self.cache_repo = cache_repo
        self.logger = logger or logging.getLogger(__name__)

    def project(self, stream: EventStream) -> tuple[CoeffSet, bool]:
        """Coefficients of a normalized stream, from the cache when possible."""
        include_self_loops = self.estimation.include_self_loops
        if self.cache_repo is not None:
            cached = self.cache_repo.load(
                self.basis.descriptor_hash, stream.fingerprint(), include_self_loops
            )
            if cached is not None:
                return cached, True
        coeffs = project(stream, self.basis, include_self_loops)
        if self.cache_repo is not None:
            self.cache_repo.save(coeffs, stream.fingerprint(), include_self_loops)
        return coeffs, False

    def estimate_subspace(self, coeffs: CoeffSet) -> SubspaceEstimate:
        """Rank-D subspace from the coefficient matrices."""
        return truncated_svd(
            build_x(coeffs),
            self.estimation.rank,
            seed=self.seed,
            scree_count=self.estimation.scree_count,
            tolerance=self.numerics.svd_tolerance,
            residual_tolerance=self.numerics.residual_tolerance,
            dense_threshold=self.numerics.dense_svd_threshold,
            max_iterations=self.numerics.max_iterations,
        )

    def run(self, stream: EventStream) -> FitOutcome:
        """Fit the model.

        Args:
            stream: Event stream in original time units

        Returns:
            FitOutcome

        Raises:
            DegenerateHorizonError: If the horizon is zero with events present
            RankError: If D > N
            NumericError: If the decomposition fails
        """
        self.logger.info(
            f"Starting fit: {stream.n_events} events, N={stream.n_nodes}, "
            f"B={self.basis.size}, D={self.estimation.rank}, alpha={self.estimation.alpha}"
        )

        # Step 1: Normalize time
        self.logger.info("Step 1: rescaling timestamps to [0, 1]")
        normalized = rescale(stream)

        # Step 2: Empirical coefficients
        self.logger.info("Step 2: projecting events onto the basis")
        coeffs, cache_hit = self.project(normalized)

        # Step 3: Common subspace
        self.logger.info("Step 3: estimating the common subspace")
        subspace = self.estimate_subspace(coeffs)

        # Step 4: Affinity coefficients and FDR thresholding
        self.logger.info("Step 4: testing affinity coefficients")
        affinity = estimate_affinity(
            coeffs,
            subspace,
            self.basis,
            alpha=self.estimation.alpha,
            method=self.estimation.fdr_method,
            exempt_scaling=self.estimation.exempt_scaling,
        )

        model = IntensityModel(
            subspace=subspace,
            affinity=affinity,
            basis=self.basis,
            thresholded=self.thresholded,
            clamp_negative=self.estimation.clamp_negative,
        )
        result: FitResult = {
            "n_nodes": normalized.n_nodes,
            "n_events": normalized.n_events,
            "basis_size": self.basis.size,
            "rank": subspace.rank,
            "n_tests": affinity.n_tests,
            "n_rejections": affinity.n_rejections,
            "deficient": subspace.deficient,
            "cache_hit": cache_hit,
        }
        self.logger.info(f"Fit complete: {result}")
        return FitOutcome(model=model, coefficients=coeffs, stream=normalized, result=result)
