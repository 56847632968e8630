"""Ground-truth intensity data models."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.errors import ParameterError, SchemaError, ShapeError
from src.models.documents import BlockIntensityDocument, TruthDocument


@dataclass(frozen=True)
class PiecewiseConstantIntensity:
    """Rate function on [0, 1] that is constant between breakpoints.

    Segment i covers ``[edges[i], edges[i+1])`` with ``edges = [0, *breakpoints, 1]``;
    t = 1 belongs to the last segment.
    """

    breakpoints: NDArray[np.float64]
    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Validate ordering and non-negativity."""
        breakpoints = np.array(self.breakpoints, dtype=np.float64, copy=True).reshape(-1)
        values = np.array(self.values, dtype=np.float64, copy=True).reshape(-1)
        if values.size != breakpoints.size + 1:
            raise ShapeError(
                f"need len(breakpoints) + 1 = {breakpoints.size + 1} values, got {values.size}"
            )
        if breakpoints.size and (
            breakpoints[0] <= 0.0 or breakpoints[-1] >= 1.0 or np.any(np.diff(breakpoints) <= 0)
        ):
            raise ParameterError("breakpoints must be strictly increasing inside (0, 1)")
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise ParameterError("intensity values must be finite and non-negative")
        breakpoints.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "breakpoints", breakpoints)
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, rate: float) -> PiecewiseConstantIntensity:
        """A single segment with the given rate."""
        return cls(breakpoints=np.empty(0), values=np.array([rate]))

    @classmethod
    def from_steps(
        cls, edges: list[float], values: list[float]
    ) -> PiecewiseConstantIntensity:
        """Build from segment edges covering [0, 1], dropping empty segments.

        Args:
            edges: Non-decreasing edges starting at 0 and ending at 1
            values: One rate per consecutive edge pair
        """
        kept_edges = [edges[0]]
        kept_values: list[float] = []
        for start, end, value in zip(edges[:-1], edges[1:], values, strict=True):
            if end > start:
                kept_edges.append(end)
                kept_values.append(value)
        return cls(breakpoints=np.asarray(kept_edges[1:-1]), values=np.asarray(kept_values))

    @property
    def edges(self) -> NDArray[np.float64]:
        """Segment boundaries including 0 and 1."""
        return np.concatenate([[0.0], self.breakpoints, [1.0]])

    @property
    def max_value(self) -> float:
        """Largest rate."""
        return float(self.values.max())

    def segments(self) -> Iterator[tuple[float, float, float]]:
        """Yield ``(start, end, rate)`` for every segment."""
        edges = self.edges
        for i, value in enumerate(self.values.tolist()):
            yield float(edges[i]), float(edges[i + 1]), value

    def evaluate(self, t: NDArray[np.float64] | float) -> NDArray[np.float64]:
        """Rate at each time point."""
        index = np.searchsorted(self.breakpoints, np.asarray(t, dtype=np.float64), side="right")
        return np.asarray(self.values[index])

    def integral(self, start: float = 0.0, end: float = 1.0) -> float:
        """Integral of the rate over ``[start, end]``."""
        edges = self.edges
        lo = np.clip(edges[:-1], start, end)
        hi = np.clip(edges[1:], start, end)
        return float(np.sum(self.values * (hi - lo)))

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {"breakpoints": self.breakpoints.tolist(), "values": self.values.tolist()}


@dataclass(frozen=True)
class GroundTruth:
    """Community-structured ground truth of a synthetic network.

    Node u belongs to community ``assignment[u]``; the rate of ordered pair
    (u, v) is ``block_intensities[(assignment[u], assignment[v])]``. The induced
    subspace has one indicator column per community scaled to unit norm, and
    the affinity measure of an interval is the block integral times
    ``sqrt(n_p n_q)``, so that ``Lambda(I) = U S(I) U^T``.
    """

    model: str
    assignment: NDArray[np.int64]
    block_intensities: dict[tuple[int, int], PiecewiseConstantIntensity]
    generator: dict[str, Any] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        """Validate community labels and block coverage."""
        assignment = np.array(self.assignment, dtype=np.int64, copy=True).reshape(-1)
        if assignment.size < 1:
            raise ParameterError("ground truth needs at least one node")
        if assignment.min() < 0:
            raise ParameterError("community labels must be non-negative")
        n_blocks = int(assignment.max()) + 1
        if np.unique(assignment).size != n_blocks:
            raise ParameterError("community labels must be 0..K-1 with every community nonempty")
        for p in range(n_blocks):
            for q in range(n_blocks):
                if (p, q) not in self.block_intensities:
                    raise ParameterError(f"missing block intensity for communities ({p}, {q})")
        assignment.setflags(write=False)
        object.__setattr__(self, "assignment", assignment)

    @property
    def n_nodes(self) -> int:
        """Number of nodes N."""
        return int(self.assignment.size)

    @property
    def n_blocks(self) -> int:
        """Number of communities K."""
        return int(self.assignment.max()) + 1

    @property
    def block_sizes(self) -> NDArray[np.int64]:
        """Members per community."""
        return np.bincount(self.assignment, minlength=self.n_blocks)

    @property
    def u_true(self) -> NDArray[np.float64]:
        """N x K indicator matrix with unit-norm columns."""
        u = np.zeros((self.n_nodes, self.n_blocks), dtype=np.float64)
        u[np.arange(self.n_nodes), self.assignment] = 1.0
        return np.asarray(u / np.sqrt(self.block_sizes)[None, :])

    def pair_intensity(self, u: int, v: int) -> PiecewiseConstantIntensity:
        """Rate function of ordered pair (u, v)."""
        if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
            raise ParameterError(f"pair ({u}, {v}) out of range for {self.n_nodes} nodes")
        return self.block_intensities[(int(self.assignment[u]), int(self.assignment[v]))]

    def block_values(self, grid: NDArray[np.float64]) -> NDArray[np.float64]:
        """Block rates on a time grid, shape (K, K, G)."""
        grid = np.asarray(grid, dtype=np.float64)
        out = np.empty((self.n_blocks, self.n_blocks, grid.size), dtype=np.float64)
        for (p, q), intensity in self.block_intensities.items():
            out[p, q] = intensity.evaluate(grid)
        return out

    def evaluate_pairs(
        self, pairs: NDArray[np.int64], grid: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """True rates for every (pair, t), shape (P, G)."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        blocks = self.block_values(grid)
        return np.asarray(blocks[self.assignment[pairs[:, 0]], self.assignment[pairs[:, 1]]])

    def affinity_measure(self, start: float = 0.0, end: float = 1.0) -> NDArray[np.float64]:
        """K x K affinity measure ``S(I)`` of the interval ``[start, end]``."""
        sizes = self.block_sizes.astype(np.float64)
        out = np.empty((self.n_blocks, self.n_blocks), dtype=np.float64)
        for (p, q), intensity in self.block_intensities.items():
            out[p, q] = intensity.integral(start, end) * np.sqrt(sizes[p] * sizes[q])
        return out

    def intensity_measure(self, start: float = 0.0, end: float = 1.0) -> NDArray[np.float64]:
        """N x N intensity measure ``Lambda(I)`` from the per-pair rates."""
        integrals = np.empty((self.n_blocks, self.n_blocks), dtype=np.float64)
        for (p, q), intensity in self.block_intensities.items():
            integrals[p, q] = intensity.integral(start, end)
        return np.asarray(integrals[self.assignment[:, None], self.assignment[None, :]])

    def to_dict(self) -> dict[str, Any]:
        """Convert to the truth.json document."""
        return {
            "model": self.model,
            "n_nodes": self.n_nodes,
            "assignment": self.assignment.tolist(),
            "blocks": [
                {"p": p, "q": q, **self.block_intensities[(p, q)].to_dict()}
                for p, q in sorted(self.block_intensities)
            ],
            "generator": self.generator,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GroundTruth:
        """Create GroundTruth from a truth.json document.

        Raises:
            SchemaError: If the document does not match the schema
        """
        try:
            document = TruthDocument.model_validate(data)
            return cls.from_document(document)
        except SchemaError:
            raise
        except ValueError as e:
            raise SchemaError(f"Invalid ground-truth document: {e}") from e

    @classmethod
    def from_document(cls, document: TruthDocument) -> GroundTruth:
        """Create GroundTruth from a validated document."""
        blocks: dict[tuple[int, int], PiecewiseConstantIntensity] = {}
        for block in document.blocks:
            blocks[(block.p, block.q)] = _intensity_from_document(block)
        return cls(
            model=document.model,
            assignment=np.asarray(document.assignment, dtype=np.int64),
            block_intensities=blocks,
            generator=document.generator,
        )


def _intensity_from_document(block: BlockIntensityDocument) -> PiecewiseConstantIntensity:
    return PiecewiseConstantIntensity(
        breakpoints=np.asarray(block.breakpoints, dtype=np.float64),
        values=np.asarray(block.values, dtype=np.float64),
    )
