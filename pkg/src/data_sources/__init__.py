"""Event stream sources: edge-list files and synthetic generators."""

from src.data_sources import edge_list, synthetic

__all__ = ["edge_list", "synthetic"]
