"""Event data source backed by a synthetic generator."""

from __future__ import annotations

import logging

from src.config.models.run_config import DsbmParams, ErBlocksParams, GeneratorConfig
from src.config.models.synthetic import SyntheticConfig
from src.data_sources.base.event_data_source import EventDataSource
from src.data_sources.synthetic.generators import dsbm_ground_truth, er_blocks_ground_truth
from src.data_sources.synthetic.network import generate_network
from src.models.event_stream import EventStream
from src.models.intensity import GroundTruth


def build_ground_truth(config: GeneratorConfig, defaults: SyntheticConfig | None = None) -> GroundTruth:
    """Ground truth described by a generator config.

    Params the config leaves out come from ``defaults``, else from the
    environment's "synthetic" section.
    """
    params = config.typed_params(defaults)
    if isinstance(params, ErBlocksParams):
        return er_blocks_ground_truth(config.n_nodes, params.scale, params.offset)
    assert isinstance(params, DsbmParams)
    return dsbm_ground_truth(
        config.n_nodes, params.lambda_intra, params.lambda_inter, params.merge_interval
    )


class SyntheticEventSource(EventDataSource):
    """Samples a network from an ER-blocks or DSBM ground truth."""

    def __init__(self, config: GeneratorConfig, logger: logging.Logger | None = None) -> None:
        self.config = config
        self.truth = build_ground_truth(config)
        self.logger = logger or logging.getLogger(__name__)

    @property
    def name(self) -> str:
        return f"synthetic:{self.config.model}"

    def load(self) -> EventStream:
        """Sample the network with the configured seed."""
        self.logger.info(
            f"Sampling {self.config.model} network: N={self.config.n_nodes}, seed={self.config.seed}"
        )
        return generate_network(self.truth, self.config.seed)
