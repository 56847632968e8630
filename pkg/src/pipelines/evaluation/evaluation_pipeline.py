"""Accuracy of a fitted model, and optionally of the baselines, against ground truth."""

from __future__ import annotations

import logging
from typing import TypedDict

import numpy as np

from src.algorithms.baselines.estimators import (
    BaselineKind,
    BaselineModel,
    histogram_subspace,
    ipp_hist,
    ipp_kde,
)
from src.algorithms.constants import DEFAULT_PATCH_SIZE, DEFAULT_QUAD_POINTS
from src.algorithms.reconstruction.intensity import PairEvaluator, model_evaluator
from src.algorithms.reconstruction.metrics import mise, pair_patch, subspace_error
from src.config.models.evaluation import DatasetDefaults
from src.config.models.run_config import BaselineConfig
from src.errors import ParameterError, ShapeError
from src.models.event_stream import EventStream
from src.models.intensity import GroundTruth
from src.models.intensity_model import IntensityModel
from src.models.subspace_estimate import SubspaceEstimate
from src.services.events.rescaling import rescale


class BaselineScore(TypedDict):
    """MISE of one baseline."""

    kind: str
    bins: int | None
    bandwidth: float | None
    own_subspace: bool
    mise: float


class EvaluationResult(TypedDict):
    """Metrics document written by the evaluate command."""

    mise: float
    subspace_error: float | None
    n_pairs: int
    quad_points: int
    baselines: list[BaselineScore]


class EvaluationPipeline:
    """Scores estimators on a patch of node pairs against a known ground truth."""

    def __init__(
        self,
        truth: GroundTruth,
        patch_size: int = DEFAULT_PATCH_SIZE,
        quad_points: int = DEFAULT_QUAD_POINTS,
        logger: logging.Logger | None = None,
    ) -> None:
        """Initialize evaluation pipeline.

        Args:
            truth: Ground truth of the network
            patch_size: Nodes in the pair patch (all ordered pairs of the first nodes)
            quad_points: Midpoint quadrature cells
            logger: Logger instance (optional)
        """
        self.truth = truth
        self.pairs = pair_patch(truth.n_nodes, patch_size)
        self.quad_points = quad_points
        self.logger = logger or logging.getLogger(__name__)

    def score(self, estimate: PairEvaluator) -> float:
        """MISE of any ``(pairs, grid) -> values`` evaluator."""
        return mise(self.truth.evaluate_pairs, estimate, self.pairs, self.quad_points)

    def score_model(self, model: IntensityModel) -> float:
        """MISE of a fitted model."""
        if model.n_nodes != self.truth.n_nodes:
            raise ShapeError(f"model has {model.n_nodes} nodes, truth has {self.truth.n_nodes}")
        return self.score(model_evaluator(model))

    def score_subspace(self, subspace: SubspaceEstimate) -> float | None:
        """Procrustes error against the true subspace, or None when the ranks differ."""
        u_true = self.truth.u_true
        if u_true.shape != subspace.u_hat.shape:
            self.logger.warning(
                f"Skipping subspace error: estimate has shape {subspace.u_hat.shape}, "
                f"truth has {u_true.shape}"
            )
            return None
        return subspace_error(subspace.u_hat, u_true)

    def build_baseline(
        self,
        stream: EventStream,
        config: BaselineConfig,
        subspace: SubspaceEstimate,
        defaults: DatasetDefaults | None = None,
        include_self_loops: bool = False,
        seed: int = 0,
    ) -> tuple[BaselineModel, int | None, float | None]:
        """Baseline model for a normalized stream.

        Missing bins or bandwidth come from the dataset defaults.

        Returns:
            Tuple of (baseline, bins used, bandwidth used)

        Raises:
            ParameterError: If a needed hyperparameter has no value
        """
        bins = config.bins if config.bins is not None else (defaults.bins if defaults else None)
        bandwidth = config.bandwidth
        if bandwidth is None and defaults is not None:
            bandwidth = defaults.bandwidth

        if config.kind == BaselineKind.HIST:
            if bins is None:
                raise ParameterError("hist baseline needs bins")
            naive = ipp_hist(stream, bins, include_self_loops)
            bandwidth = None
        else:
            if bandwidth is None:
                raise ParameterError("kde baseline needs a bandwidth")
            naive = ipp_kde(stream, bandwidth, include_self_loops)

        if config.own_subspace:
            if bins is None:
                raise ParameterError("own_subspace needs bins for the histogram coefficients")
            subspace = histogram_subspace(stream, bins, subspace.rank, seed, include_self_loops)
        return BaselineModel(naive=naive, subspace=subspace), (
            bins if config.kind == BaselineKind.HIST or config.own_subspace else None
        ), bandwidth

    def run(
        self,
        model: IntensityModel,
        stream: EventStream | None = None,
        baselines: list[BaselineConfig] | None = None,
        defaults: DatasetDefaults | None = None,
        include_self_loops: bool = False,
        seed: int = 0,
    ) -> EvaluationResult:
        """Score the model and each requested baseline.

        Args:
            model: Fitted model
            stream: Event stream, needed only for baselines
            baselines: Baseline configurations to compare against
            defaults: Dataset hyperparameter defaults for the baselines
            include_self_loops: Whether the baselines count self-loops
            seed: Seed for baselines that estimate their own subspace

        Returns:
            EvaluationResult
        """
        self.logger.info(
            f"Evaluating on {self.pairs.shape[0]} pairs with {self.quad_points} quadrature points"
        )

        # Step 1: Model
        result: EvaluationResult = {
            "mise": self.score_model(model),
            "subspace_error": self.score_subspace(model.subspace),
            "n_pairs": int(self.pairs.shape[0]),
            "quad_points": self.quad_points,
            "baselines": [],
        }
        self.logger.info(f"Model MISE: {result['mise']:.6g}")

        # Step 2: Baselines
        normalized = rescale(stream) if stream is not None else None
        for config in baselines or []:
            if normalized is None:
                raise ParameterError("baseline comparison needs the event stream")
            baseline, bins, bandwidth = self.build_baseline(
                normalized, config, model.subspace, defaults, include_self_loops, seed
            )
            score: BaselineScore = {
                "kind": str(config.kind),
                "bins": bins,
                "bandwidth": bandwidth,
                "own_subspace": config.own_subspace,
                "mise": self.score(baseline.evaluate_grid),
            }
            self.logger.info(f"Baseline {score['kind']} MISE: {score['mise']:.6g}")
            result["baselines"].append(score)

        return result


def relative_scores(result: EvaluationResult) -> dict[str, float]:
    """Baseline MISE divided by the model MISE, keyed by baseline kind."""
    model_mise = result["mise"]
    return {
        score["kind"]: float(score["mise"] / model_mise) if model_mise > 0 else float(np.inf)
        for score in result["baselines"]
    }
