"""Base repository class providing file-backed persistence.

Every artifact lives under one root directory. Writes go through a temp file
and a rename so readers never see partial files; floats are written with
round-trip precision so identical runs produce identical bytes.
"""

from __future__ import annotations

import io
import json
import logging
from pathlib import Path
from typing import Any, Protocol, TypeVar

import pandas as pd
from pydantic import BaseModel, ValidationError

from src.errors import SchemaError
from src.utils.file_utils import atomic_write_text


class DataModelProtocol(Protocol):
    """Protocol for data model classes."""

    def to_dict(self) -> dict[str, Any]: ...


TSchema = TypeVar("TSchema", bound=BaseModel)


class BaseFileRepository:
    """Base repository reading and writing documents under a root directory."""

    def __init__(self, root: str | Path, logger: logging.Logger | None = None) -> None:
        """Initialize repository.

        Args:
            root: Directory holding the artifacts (created on first write)
            logger: Optional logger
        """
        self.root = Path(root)
        self._logger = logger or logging.getLogger(self.__class__.__name__)

    def path(self, name: str) -> Path:
        """Location of an artifact."""
        return self.root / name

    def exists(self, name: str) -> bool:
        """Whether an artifact has been written."""
        return self.path(name).exists()

    def write_text(self, name: str, content: str) -> Path:
        """Atomically write a text artifact."""
        path = atomic_write_text(self.path(name), content)
        self._logger.debug(f"Wrote {path}")
        return path

    def write_json(self, name: str, data: dict[str, Any] | list[Any]) -> Path:
        """Write canonical JSON (sorted keys, two-space indent, trailing newline)."""
        return self.write_text(name, json.dumps(data, indent=2, sort_keys=True, allow_nan=False) + "\n")

    def write_model(self, name: str, model: DataModelProtocol) -> Path:
        """Write a data model through its ``to_dict``."""
        return self.write_json(name, model.to_dict())

    def write_frame(self, name: str, frame: pd.DataFrame) -> Path:
        """Write a DataFrame as CSV without the index."""
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return self.write_text(name, buffer.getvalue())

    def read_json(self, name: str | Path) -> Any:
        """Read a JSON artifact.

        Raises:
            FileNotFoundError: If the artifact doesn't exist
            SchemaError: If the content is not valid JSON
        """
        path = self._resolve(name)
        if not path.exists():
            raise FileNotFoundError(f"Artifact not found: {path}")
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path} is not valid JSON: {e}") from e

    def read_schema(self, name: str | Path, schema: type[TSchema]) -> TSchema:
        """Read a JSON artifact and validate it against a pydantic schema.

        Raises:
            SchemaError: If the document does not match the schema
        """
        data = self.read_json(name)
        try:
            return schema.model_validate(data)
        except ValidationError as e:
            raise SchemaError(f"{self._resolve(name)} does not match {schema.__name__}: {e}") from e

    def read_frame(self, name: str | Path) -> pd.DataFrame:
        """Read a CSV artifact.

        Raises:
            FileNotFoundError: If the artifact doesn't exist
            SchemaError: If the CSV cannot be parsed
        """
        path = self._resolve(name)
        if not path.exists():
            raise FileNotFoundError(f"Artifact not found: {path}")
        try:
            return pd.read_csv(path)
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise SchemaError(f"{path} is not a valid CSV: {e}") from e

    def _resolve(self, name: str | Path) -> Path:
        # Path objects are explicit locations; strings name artifacts under the root
        return name if isinstance(name, Path) else self.path(name)
