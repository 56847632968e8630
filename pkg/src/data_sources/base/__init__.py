"""Base classes for data sources."""

from src.data_sources.base.event_data_source import EventDataSource

__all__ = ["EventDataSource"]
