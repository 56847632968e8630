"""Effect of the resolution J on the linear and thresholded estimators."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import TypedDict

from src.algorithms.basis.haar import haar_basis
from src.config.models.estimation import EstimationConfig, NumericsConfig
from src.errors import ParameterError
from src.models.event_stream import EventStream
from src.pipelines.estimation.fit_pipeline import FitPipeline
from src.pipelines.evaluation.evaluation_pipeline import EvaluationPipeline


class SweepRow(TypedDict):
    """MISE of both estimators at one resolution."""

    levels: int
    mise_linear: float
    mise_thresholded: float


class LevelSweepPipeline:
    """Fits the same stream at several Haar resolutions.

    The linear estimator keeps every coefficient, so its variance grows with
    J; the thresholded one should stay flat once J resolves the truth.
    """

    def __init__(
        self,
        estimation: EstimationConfig,
        evaluation: EvaluationPipeline,
        numerics: NumericsConfig | None = None,
        seed: int = 0,
        logger: logging.Logger | None = None,
    ) -> None:
        self.estimation = estimation
        self.evaluation = evaluation
        self.numerics = numerics
        self.seed = seed
        self.logger = logger or logging.getLogger(__name__)

    def run(self, stream: EventStream, levels: list[int]) -> list[SweepRow]:
        """Sweep over ``levels``.

        Raises:
            ParameterError: If no levels are given
        """
        if not levels:
            raise ParameterError("level sweep needs at least one level")
        rows: list[SweepRow] = []
        for level in levels:
            self.logger.info(f"Sweep: fitting J={level}")
            pipeline = FitPipeline(
                haar_basis(level),
                self.estimation,
                self.numerics,
                seed=self.seed,
                logger=self.logger,
            )
            fitted = pipeline.run(stream).model
            rows.append(
                {
                    "levels": level,
                    "mise_linear": self.evaluation.score_model(replace(fitted, thresholded=False)),
                    "mise_thresholded": self.evaluation.score_model(replace(fitted, thresholded=True)),
                }
            )
            self.logger.info(f"Sweep J={level}: {rows[-1]}")
        return rows
