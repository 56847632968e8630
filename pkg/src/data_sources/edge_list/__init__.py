"""CSV edge-list event files."""

from src.data_sources.edge_list.csv_events import CsvEventSource, EdgeListFormat, load_events

__all__ = ["CsvEventSource", "EdgeListFormat", "load_events"]
