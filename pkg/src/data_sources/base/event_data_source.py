"""Abstract base class for event stream providers."""

from __future__ import annotations

from abc import ABC, abstractmethod

from src.models.event_stream import EventStream


class EventDataSource(ABC):
    """Anything that can produce an EventStream: an edge-list file or a generator."""

    @abstractmethod
    def load(self) -> EventStream:
        """Produce the event stream.

        Returns:
            EventStream in original time units

        Raises:
            DataError: When the source data is malformed
        """
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Get the name of the data source.

        Returns:
            String identifier for the data source
        """
        pass
