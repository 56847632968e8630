"""Services layer for transformations shared across pipelines."""

from src.services.events.rescaling import rescale

__all__ = ["rescale"]
