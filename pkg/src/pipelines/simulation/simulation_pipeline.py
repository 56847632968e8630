"""Sample a synthetic network and persist it with its ground truth."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import TypedDict

from src.config.models.run_config import GeneratorConfig
from src.data_sources.synthetic.synthetic_source import SyntheticEventSource
from src.models.event_stream import EventStream
from src.models.intensity import GroundTruth
from src.repos.artifacts.ground_truth_repository import GroundTruthRepository
from src.repos.events.event_stream_repository import EventStreamRepository


class SimulationResult(TypedDict):
    """Summary of one simulation."""

    model: str
    n_nodes: int
    n_events: int
    seed: int
    events_path: str
    truth_path: str


class SimulationPipeline:
    """Generates ``events.csv`` and ``truth.json`` from a generator config."""

    def __init__(
        self,
        config: GeneratorConfig,
        events_repo: EventStreamRepository,
        truth_repo: GroundTruthRepository,
        logger: logging.Logger | None = None,
    ) -> None:
        self.config = config
        self.events_repo = events_repo
        self.truth_repo = truth_repo
        self.logger = logger or logging.getLogger(__name__)

    def run(self) -> tuple[EventStream, GroundTruth, SimulationResult]:
        """Sample and save.

        Returns:
            Tuple of (stream, truth, summary)
        """
        # Step 1: Sample
        source = SyntheticEventSource(self.config, logger=self.logger)
        stream = source.load()
        truth = replace(
            source.truth, generator={**(source.truth.generator or {}), "seed": self.config.seed}
        )

        # Step 2: Persist
        events_path = self.events_repo.save(stream)
        truth_path = self.truth_repo.save(truth)

        result: SimulationResult = {
            "model": self.config.model,
            "n_nodes": stream.n_nodes,
            "n_events": stream.n_events,
            "seed": self.config.seed,
            "events_path": str(events_path),
            "truth_path": str(truth_path),
        }
        self.logger.info(f"Simulation complete: {result}")
        return stream, truth, result
