"""Empirical coefficient set data model."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray
from scipy import sparse

from src.errors import SchemaError, ShapeError


def _frozen(values: Any, dtype: type) -> NDArray[Any]:
    array = np.array(values, dtype=dtype, copy=True).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class CoeffSet:
    """Sparse coefficient matrices ``Y(phi^b)`` and ``Y((phi^b)^2)`` for every b.

    Entries of all B matrices are stored in one coordinate list sorted by
    ``(b, u, v)``; ``offsets[b]:offsets[b+1]`` selects the entries of function b.
    A pair has an entry for b exactly when it has at least one event in the
    support of ``phi^b``, even if the accumulated value cancels to zero.
    """

    n_nodes: int
    n_basis: int
    basis_hash: str
    offsets: NDArray[np.int64]
    rows: NDArray[np.int64]
    cols: NDArray[np.int64]
    values: NDArray[np.float64]
    sq_values: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Freeze arrays and check the layout."""
        object.__setattr__(self, "offsets", _frozen(self.offsets, np.int64))
        object.__setattr__(self, "rows", _frozen(self.rows, np.int64))
        object.__setattr__(self, "cols", _frozen(self.cols, np.int64))
        object.__setattr__(self, "values", _frozen(self.values, np.float64))
        object.__setattr__(self, "sq_values", _frozen(self.sq_values, np.float64))

        nnz = self.rows.size
        if self.offsets.size != self.n_basis + 1:
            raise ShapeError(
                f"offsets must have n_basis + 1 = {self.n_basis + 1} entries, "
                f"got {self.offsets.size}"
            )
        if self.offsets[0] != 0 or self.offsets[-1] != nnz or np.any(np.diff(self.offsets) < 0):
            raise ShapeError("offsets must be non-decreasing from 0 to the entry count")
        if not self.cols.size == self.values.size == self.sq_values.size == nnz:
            raise ShapeError("rows, cols, values and sq_values must have equal length")
        if nnz and (
            min(self.rows.min(), self.cols.min()) < 0
            or max(self.rows.max(), self.cols.max()) >= self.n_nodes
        ):
            raise ShapeError(f"node ids must lie in [0, {self.n_nodes})")
        if np.any(self.sq_values < 0):
            raise ShapeError("squared-function coefficients must be non-negative")

    @property
    def nnz(self) -> int:
        """Total stored entries over all b."""
        return int(self.rows.size)

    @property
    def is_empty(self) -> bool:
        """Whether no function has a stored entry."""
        return self.nnz == 0

    def entry_count(self, b: int) -> int:
        """Number of stored pairs for function b."""
        return int(self.offsets[b + 1] - self.offsets[b])

    def entries(
        self, b: int
    ) -> tuple[NDArray[np.int64], NDArray[np.int64], NDArray[np.float64], NDArray[np.float64]]:
        """Rows, cols, values and squared values stored for function b."""
        start, stop = int(self.offsets[b]), int(self.offsets[b + 1])
        return (
            self.rows[start:stop],
            self.cols[start:stop],
            self.values[start:stop],
            self.sq_values[start:stop],
        )

    def pair_map(self, b: int, squared: bool = False) -> dict[tuple[int, int], float]:
        """Function b's coefficients as a ``(u, v) -> value`` dict."""
        rows, cols, values, sq_values = self.entries(b)
        chosen = sq_values if squared else values
        return {
            (u, v): value
            for u, v, value in zip(rows.tolist(), cols.tolist(), chosen.tolist(), strict=True)
        }

    def matrix(self, b: int, squared: bool = False) -> sparse.csr_matrix:
        """Function b's coefficients as a sparse N x N matrix."""
        rows, cols, values, sq_values = self.entries(b)
        data = sq_values if squared else values
        return sparse.csr_matrix(
            (data, (rows, cols)), shape=(self.n_nodes, self.n_nodes), dtype=np.float64
        )

    def basis_index(self) -> NDArray[np.int64]:
        """The function index b of every stored entry."""
        return np.repeat(np.arange(self.n_basis, dtype=np.int64), np.diff(self.offsets))

    def to_dict(self) -> dict[str, Any]:
        """Serialize as per-b lists of ``[u, v, value, sq_value]`` plus the basis hash."""
        return {
            "n_nodes": self.n_nodes,
            "n_basis": self.n_basis,
            "basis_hash": self.basis_hash,
            "entries": [
                [
                    [u, v, value, sq]
                    for u, v, value, sq in zip(
                        *(array.tolist() for array in self.entries(b)), strict=True
                    )
                ]
                for b in range(self.n_basis)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CoeffSet:
        """Create CoeffSet from ``to_dict`` output.

        Raises:
            SchemaError: If the document is malformed
        """
        try:
            per_b = data["entries"]
            n_basis = int(data["n_basis"])
            if len(per_b) != n_basis:
                raise ValueError(f"expected {n_basis} entry lists, got {len(per_b)}")
            flat = [entry for entries in per_b for entry in entries]
            counts = [len(entries) for entries in per_b]
            return cls(
                n_nodes=int(data["n_nodes"]),
                n_basis=n_basis,
                basis_hash=str(data["basis_hash"]),
                offsets=np.concatenate([[0], np.cumsum(counts)]),
                rows=[int(e[0]) for e in flat],
                cols=[int(e[1]) for e in flat],
                values=[float(e[2]) for e in flat],
                sq_values=[float(e[3]) for e in flat],
            )
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise SchemaError(f"Invalid coefficient dump: {e}") from e
