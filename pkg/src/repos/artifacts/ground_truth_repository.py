"""Ground-truth document (``truth.json``)."""

from __future__ import annotations

from pathlib import Path

from src.errors import SchemaError
from src.models.intensity import GroundTruth
from src.repos.base_repository import BaseFileRepository

TRUTH_FILE = "truth.json"


class GroundTruthRepository(BaseFileRepository):
    """Writes and reads the ground truth of a synthetic network."""

    def save(self, truth: GroundTruth, name: str = TRUTH_FILE) -> Path:
        """Write the truth document."""
        return self.write_model(name, truth)

    def load(self, name: str | Path = TRUTH_FILE) -> GroundTruth:
        """Read and validate a truth document.

        Raises:
            FileNotFoundError: If the file doesn't exist
            SchemaError: If the document is malformed
        """
        data = self.read_json(name)
        if not isinstance(data, dict):
            raise SchemaError("ground-truth document must be a JSON object")
        return GroundTruth.from_dict(data)
