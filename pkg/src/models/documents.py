"""Schemas for the JSON documents written next to data files."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class EventSidecar(BaseModel):
    """Metadata sidecar of an events CSV."""

    model_config = ConfigDict(extra="forbid")

    n_nodes: int | None = Field(default=None, ge=1)
    horizon: float | None = Field(default=None, ge=0.0)
    directed: bool = True
    symmetrized: bool = False


class BlockIntensityDocument(BaseModel):
    """Piecewise-constant rate between communities p and q."""

    model_config = ConfigDict(extra="forbid")

    p: int = Field(ge=0)
    q: int = Field(ge=0)
    breakpoints: list[float]
    values: list[float]


class TruthDocument(BaseModel):
    """Ground-truth dump written by the simulate command."""

    model_config = ConfigDict(extra="forbid")

    model: str
    n_nodes: int = Field(ge=1)
    assignment: list[int]
    blocks: list[BlockIntensityDocument]
    generator: dict[str, Any] | None = None

    @model_validator(mode="after")
    def _check_assignment(self) -> TruthDocument:
        if len(self.assignment) != self.n_nodes:
            raise ValueError("assignment must have one label per node")
        return self
