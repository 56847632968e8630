"""Basis function data models."""

from __future__ import annotations

import hashlib
import json
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.errors import ParameterError

Evaluator = Callable[[NDArray[np.float64]], NDArray[np.float64]]


class BasisKind(StrEnum):
    """Closed-form Haar functions or generic (sampled / orthonormalized) ones."""

    HAAR_SCALING = "haar_scaling"
    HAAR_DETAIL = "haar_detail"
    GENERIC = "generic"


@dataclass(frozen=True)
class BasisFunction:
    """One orthonormal function on [0, 1].

    Haar detail functions carry their scale ``j`` and location ``k`` and are
    evaluated in closed form; generic functions carry a vectorized evaluator.
    """

    id: int
    kind: BasisKind
    scale: int | None = None
    location: int | None = None
    support: tuple[float, float] = (0.0, 1.0)
    evaluator: Evaluator | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate kind-specific fields."""
        if self.kind is BasisKind.HAAR_DETAIL:
            if self.scale is None or self.location is None:
                raise ParameterError("haar_detail functions need scale and location")
            if self.scale < 0 or not 0 <= self.location < 2**self.scale:
                raise ParameterError(
                    f"invalid Haar position (j={self.scale}, k={self.location})"
                )
        elif self.kind is BasisKind.GENERIC and self.evaluator is None:
            raise ParameterError("generic basis functions need an evaluator")
        lo, hi = self.support
        if not 0.0 <= lo <= hi <= 1.0:
            raise ParameterError(f"support {self.support} must lie in [0, 1]")

    @property
    def is_haar(self) -> bool:
        """Whether the function is evaluated in closed form."""
        return self.kind is not BasisKind.GENERIC

    @property
    def amplitude(self) -> float:
        """Absolute value on the support: ``2^(j/2)`` for details, 1 for scaling."""
        if self.kind is BasisKind.HAAR_DETAIL:
            assert self.scale is not None
            return float(2.0 ** (self.scale / 2.0))
        return 1.0

    @property
    def squared_amplitude(self) -> float:
        """Value of the square on the support, exactly ``2^j`` for details."""
        if self.kind is BasisKind.HAAR_DETAIL:
            assert self.scale is not None
            return float(2**self.scale)
        return 1.0


@dataclass(frozen=True)
class BasisSet:
    """An ordered orthonormal family ``phi^0 .. phi^(B-1)``.

    For the Haar family ``max_level`` is J and B = 2^J: the scaling function
    followed by the detail functions of levels 0..J-1, ``psi_{j,k}`` at index
    ``2^j + k``.
    """

    functions: tuple[BasisFunction, ...]
    max_level: int | None = None
    descriptor: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        """Check ids run 0..B-1 in order."""
        if not self.functions:
            raise ParameterError("a basis needs at least one function")
        for position, function in enumerate(self.functions):
            if function.id != position:
                raise ParameterError(
                    f"basis function ids must be 0..B-1 in order; "
                    f"found id {function.id} at position {position}"
                )

    @property
    def size(self) -> int:
        """Number of functions B."""
        return len(self.functions)

    @property
    def is_haar(self) -> bool:
        """Whether this is the closed-form Haar family."""
        return self.max_level is not None and all(f.is_haar for f in self.functions)

    def level_slice(self, level: int) -> slice:
        """Indices of the Haar detail functions at scale ``level``."""
        if not self.is_haar:
            raise ParameterError("level_slice is only defined for the Haar family")
        assert self.max_level is not None
        if not 0 <= level < self.max_level:
            raise ParameterError(f"level must be in [0, {self.max_level}), got {level}")
        return slice(2**level, 2 ** (level + 1))

    @cached_property
    def descriptor_hash(self) -> str:
        """SHA-256 of the canonical JSON descriptor."""
        canonical = json.dumps(self.descriptor, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()

    def __getitem__(self, index: int) -> BasisFunction:
        return self.functions[index]

    def __len__(self) -> int:
        return len(self.functions)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of pairwise L2 inner products ``G_kl = <phi^k, phi^l>``."""

    entries: NDArray[np.float64]

    def __post_init__(self) -> None:
        """Validate shape and symmetry."""
        entries = np.asarray(self.entries, dtype=np.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ParameterError(f"Gram matrix must be square, got shape {entries.shape}")
        # symmetrize away quadrature round-off
        object.__setattr__(self, "entries", (entries + entries.T) / 2.0)

    @cached_property
    def eigen(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Ascending eigenvalues and eigenvectors."""
        eigenvalues, eigenvectors = np.linalg.eigh(self.entries)
        return eigenvalues, eigenvectors

    @property
    def smallest_eigenvalue(self) -> float:
        """Smallest eigenvalue."""
        return float(self.eigen[0][0])

    @property
    def condition_number(self) -> float:
        """Ratio of largest to smallest eigenvalue (inf when singular)."""
        eigenvalues = self.eigen[0]
        if eigenvalues[0] <= 0:
            return float("inf")
        return float(eigenvalues[-1] / eigenvalues[0])

    def inverse_sqrt(self) -> NDArray[np.float64]:
        """``G^{-1/2}`` from the symmetric eigendecomposition."""
        eigenvalues, eigenvectors = self.eigen
        return np.asarray((eigenvectors / np.sqrt(eigenvalues)) @ eigenvectors.T)
