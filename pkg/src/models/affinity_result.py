"""Thresholded affinity coefficient data model."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.errors import SchemaError, ShapeError


def _frozen(values: Any, dtype: type) -> NDArray[Any]:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class AffinityResult:
    """Per-basis-function D x D affinity coefficients and their significance.

    All matrix fields have shape (B, D, D). ``tested[b]`` says whether function b
    entered the multiple-testing family; untested functions (the Haar scaling
    function by default) keep their coefficients with mask 1.

    Attributes:
        s_hat: ``U^T Y(phi^b) U``
        var_hat: Plug-in variance ``sum U_up^2 U_vq^2 Y_uv((phi^b)^2)``
        z: ``s_hat / sqrt(var_hat)``, 0 where the variance vanishes
        testable: Entries with positive variance
        tested: Functions in the testing scope, shape (B,)
        p_raw: Two-sided normal p-values (1 for untestable entries)
        p_adj: Multiplicity-adjusted p-values (``p_raw`` outside the family)
        mask: Retained coefficients
        alpha: FDR level
        fdr_method: "bh" or "by"
    """

    s_hat: NDArray[np.float64]
    var_hat: NDArray[np.float64]
    z: NDArray[np.float64]
    testable: NDArray[np.bool_]
    tested: NDArray[np.bool_]
    p_raw: NDArray[np.float64]
    p_adj: NDArray[np.float64]
    mask: NDArray[np.bool_]
    alpha: float
    fdr_method: str = "bh"
    s_thresh: NDArray[np.float64] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Freeze arrays, validate shapes and derive ``s_thresh``."""
        for name in ("s_hat", "var_hat", "z", "p_raw", "p_adj"):
            object.__setattr__(self, name, _frozen(getattr(self, name), np.float64))
        for name in ("testable", "mask", "tested"):
            object.__setattr__(self, name, _frozen(getattr(self, name), np.bool_))

        shape = self.s_hat.shape
        if len(shape) != 3 or shape[1] != shape[2]:
            raise ShapeError(f"s_hat must have shape (B, D, D), got {shape}")
        for name in ("var_hat", "z", "testable", "p_raw", "p_adj", "mask"):
            if getattr(self, name).shape != shape:
                raise ShapeError(f"{name} must have shape {shape}, got {getattr(self, name).shape}")
        if self.tested.shape != (shape[0],):
            raise ShapeError(f"tested must have shape ({shape[0]},), got {self.tested.shape}")
        if np.any(self.var_hat < 0):
            raise ShapeError("var_hat must be non-negative")
        if np.any(self.p_raw < 0) or np.any(self.p_adj > 1) or np.any(self.p_adj < self.p_raw):
            raise ShapeError("p-values must satisfy 0 <= p_raw <= p_adj <= 1")

        object.__setattr__(self, "s_thresh", _frozen(np.where(self.mask, self.s_hat, 0.0), np.float64))

    @property
    def n_basis(self) -> int:
        """Number of basis functions B."""
        return int(self.s_hat.shape[0])

    @property
    def rank(self) -> int:
        """Subspace dimension D."""
        return int(self.s_hat.shape[1])

    @property
    def n_tests(self) -> int:
        """Size m of the testing family."""
        return int(np.count_nonzero(self.testable & self.tested[:, None, None]))

    @property
    def n_rejections(self) -> int:
        """Number of rejected hypotheses inside the testing family."""
        return int(np.count_nonzero(self.mask & self.tested[:, None, None]))

    def coefficients(self, thresholded: bool = True) -> NDArray[np.float64]:
        """``s_thresh`` or, for the linear estimator, ``s_hat``."""
        return self.s_thresh if thresholded else self.s_hat

    def to_dict(self) -> dict[str, Any]:
        """Serialize with per-b flattened D x D arrays."""
        n_basis = self.n_basis

        def flat(array: NDArray[Any]) -> list[Any]:
            return array.reshape(n_basis, -1).tolist()

        return {
            "alpha": self.alpha,
            "fdr_method": self.fdr_method,
            "n_basis": n_basis,
            "rank": self.rank,
            "tested": self.tested.tolist(),
            "s_hat": flat(self.s_hat),
            "var_hat": flat(self.var_hat),
            "z": flat(self.z),
            "p_raw": flat(self.p_raw),
            "p_adj": flat(self.p_adj),
            "testable": flat(self.testable),
            "mask": flat(self.mask.astype(np.int64)),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AffinityResult:
        """Create AffinityResult from ``to_dict`` output.

        Raises:
            SchemaError: If the document is malformed
        """
        try:
            shape = (int(data["n_basis"]), int(data["rank"]), int(data["rank"]))

            def unflat(key: str, dtype: type) -> NDArray[Any]:
                return np.asarray(data[key], dtype=dtype).reshape(shape)

            return cls(
                s_hat=unflat("s_hat", np.float64),
                var_hat=unflat("var_hat", np.float64),
                z=unflat("z", np.float64),
                testable=unflat("testable", np.bool_),
                tested=np.asarray(data["tested"], dtype=np.bool_),
                p_raw=unflat("p_raw", np.float64),
                p_adj=unflat("p_adj", np.float64),
                mask=unflat("mask", np.int64).astype(np.bool_),
                alpha=float(data["alpha"]),
                fdr_method=str(data.get("fdr_method", "bh")),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f"Invalid affinity document: {e}") from e
