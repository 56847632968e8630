"""Canonical events CSV plus JSON sidecar."""

from __future__ import annotations

from pathlib import Path

from src.data_sources.edge_list.csv_events import CsvEventSource, sidecar_path
from src.models.documents import EventSidecar
from src.models.event_stream import EventStream
from src.repos.base_repository import BaseFileRepository

EVENTS_FILE = "events.csv"


class EventStreamRepository(BaseFileRepository):
    """Reads and writes event streams in the ``u,v,t`` edge-list format."""

    def save(self, stream: EventStream, name: str = EVENTS_FILE) -> Path:
        """Write the stream and its sidecar.

        Undirected streams are written with their mirrored events and marked
        ``symmetrized`` so loading them does not mirror twice.

        Returns:
            Path of the CSV file
        """
        path = self.write_frame(name, stream.to_dataframe())
        sidecar = EventSidecar(
            n_nodes=stream.n_nodes,
            horizon=stream.horizon,
            directed=stream.directed,
            symmetrized=not stream.directed,
        )
        self.write_json(sidecar_path(name).name, sidecar.model_dump())
        self._logger.info(f"Saved {stream.n_events} events to {path}")
        return path

    def load(self, name: str = EVENTS_FILE) -> EventStream:
        """Load a stream written by ``save``."""
        return CsvEventSource(self.path(name), logger=self._logger).load()
