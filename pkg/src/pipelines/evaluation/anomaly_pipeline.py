"""Multiscale anomaly profile of a fitted model."""

from __future__ import annotations

import logging
from typing import TypedDict

import numpy as np

from src.algorithms.anomaly.multiscale import activity_volume, multiscale_score
from src.models.anomaly_profile import AnomalyProfile, ScoreSource
from src.models.event_stream import EventStream
from src.models.intensity_model import IntensityModel
from src.repos.artifacts.report_repository import ReportRepository
from src.services.events.rescaling import rescale


class AnomalyResult(TypedDict):
    """Summary of one scoring run."""

    source: str
    levels: int
    peak_cells: list[int]
    activity_written: bool


class AnomalyPipeline:
    """Scores a fitted Haar model and writes the per-scale profile."""

    def __init__(self, report_repo: ReportRepository, logger: logging.Logger | None = None) -> None:
        self.report_repo = report_repo
        self.logger = logger or logging.getLogger(__name__)

    def run(
        self,
        model: IntensityModel,
        source: ScoreSource = ScoreSource.THRESHOLDED,
        stream: EventStream | None = None,
        include_self_loops: bool = False,
    ) -> tuple[AnomalyProfile, AnomalyResult]:
        """Compute and save the profile.

        When the stream is given, the per-cell event volume at the finest
        scale is written alongside for comparison.

        Raises:
            UnsupportedBasisError: If the model's basis is not Haar
        """
        # Step 1: Score
        profile = multiscale_score(model.affinity, model.basis, source)
        self.report_repo.save_anomaly(profile)

        # Step 2: Activity volume
        activity_written = False
        if stream is not None and profile.levels:
            counts = activity_volume(rescale(stream), profile.levels - 1, include_self_loops)
            self.report_repo.save_activity(counts)
            activity_written = True

        result: AnomalyResult = {
            "source": str(source),
            "levels": profile.levels,
            "peak_cells": [int(np.argmax(scores)) for scores in profile.scores],
            "activity_written": activity_written,
        }
        self.logger.info(f"Anomaly scoring complete: {result}")
        return profile, result
