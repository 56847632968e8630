"""Time normalization of event streams."""

from __future__ import annotations

import logging

from src.errors import DegenerateHorizonError
from src.models.event_stream import EventStream

logger = logging.getLogger(__name__)


def rescale(stream: EventStream) -> EventStream:
    """Map timestamps from ``[0, T]`` to ``[0, 1]`` by dividing by T.

    Event order is preserved. A stream that already has ``T = 1`` is returned
    unchanged; an empty stream with ``T = 0`` just gets horizon 1.

    Args:
        stream: Stream in original time units

    Returns:
        Normalized stream with horizon 1

    Raises:
        DegenerateHorizonError: If T = 0 and the stream has events
    """
    if stream.is_normalized:
        return stream
    if stream.horizon == 0.0:
        if stream.n_events:
            raise DegenerateHorizonError(
                f"cannot rescale {stream.n_events} events observed over a zero-length horizon"
            )
        return stream.with_times(stream.times, 1.0)

    times = stream.times / stream.horizon
    logger.debug(f"Rescaled {stream.n_events} events from horizon {stream.horizon} to 1")
    return stream.with_times(times, 1.0)
