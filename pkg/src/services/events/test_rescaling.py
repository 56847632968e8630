"""Unit tests for time normalization."""

from __future__ import annotations

import unittest

import numpy as np

from src.errors import DegenerateHorizonError
from src.models.event_stream import EventStream
from src.services.events.rescaling import rescale


class TestRescale(unittest.TestCase):
    """Mapping [0, T] onto [0, 1]."""

    def test_divides_by_horizon(self) -> None:
        stream = EventStream.from_events([(0, 1, 2.0), (1, 0, 4.0), (0, 1, 8.0)], n_nodes=2, horizon=8.0)
        normalized = rescale(stream)
        np.testing.assert_allclose(normalized.times, [0.25, 0.5, 1.0])
        self.assertEqual(normalized.horizon, 1.0)
        np.testing.assert_array_equal(normalized.sources, stream.sources)

    def test_normalized_stream_unchanged(self) -> None:
        stream = EventStream.from_events([(0, 1, 0.3)], n_nodes=2, horizon=1.0)
        self.assertIs(rescale(stream), stream)

    def test_empty_zero_horizon(self) -> None:
        stream = EventStream.empty(3, horizon=0.0)
        self.assertEqual(rescale(stream).horizon, 1.0)

    def test_events_on_zero_horizon(self) -> None:
        """Test a zero-length horizon with events cannot be normalized."""
        stream = EventStream.from_events([(0, 1, 0.0)], n_nodes=2, horizon=0.0)
        with self.assertRaises(DegenerateHorizonError):
            rescale(stream)


if __name__ == "__main__":
    unittest.main()
