"""The fit bundle: subspace, spectrum, affinity coefficients, mask, basis and manifest."""

from __future__ import annotations

import platform
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
import pydantic
import scipy

from src.algorithms.basis.descriptors import basis_from_descriptor
from src.algorithms.subspace.truncated_svd import scree
from src.errors import SchemaError
from src.models.affinity_result import AffinityResult
from src.models.intensity_model import IntensityModel
from src.models.subspace_estimate import SubspaceEstimate
from src.repos.base_repository import BaseFileRepository

SUBSPACE_FILE = "subspace.csv"
SCREE_FILE = "scree.csv"
AFFINITY_FILE = "affinity.json"
MASK_FILE = "mask.json"
BASIS_FILE = "basis.json"
MANIFEST_FILE = "manifest.json"

PACKAGE_VERSION = "0.1.0"


def library_versions() -> dict[str, str]:
    """Versions recorded in the manifest."""
    return {
        "anie": PACKAGE_VERSION,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
        "pydantic": pydantic.VERSION,
    }


class ModelBundleRepository(BaseFileRepository):
    """Writes and reads the artifacts of one fit.

    Everything except ``manifest.json`` is a pure function of the inputs, so two
    runs with the same config and seed produce byte-identical files.
    """

    def save(self, model: IntensityModel, config: dict[str, Any] | None = None) -> list[Path]:
        """Write the bundle.

        Args:
            model: Fitted model
            config: Effective run configuration recorded in the manifest

        Returns:
            Paths written
        """
        subspace = model.subspace
        affinity = model.affinity
        u_columns = {f"u{d}": subspace.u_hat[:, d] for d in range(subspace.rank)}
        subspace_frame = pd.DataFrame({"node": np.arange(subspace.n_nodes), **u_columns})
        scree_frame = pd.DataFrame(scree(subspace), columns=["index", "sigma"])

        mask_document = {
            "alpha": affinity.alpha,
            "fdr_method": affinity.fdr_method,
            "n_tests": affinity.n_tests,
            "n_rejections": affinity.n_rejections,
            "tested": affinity.tested.tolist(),
            "mask": affinity.mask.reshape(affinity.n_basis, -1).astype(np.int64).tolist(),
        }
        basis_document = {
            "descriptor": model.basis.descriptor,
            "size": model.basis.size,
            "hash": model.basis.descriptor_hash,
        }
        manifest = {
            "config": config or {},
            "versions": library_versions(),
            "created_at": datetime.now(UTC).isoformat(),
            "subspace": {
                "n_nodes": subspace.n_nodes,
                "rank": subspace.rank,
                "deficient": subspace.deficient,
                "residual": subspace.residual,
            },
            "thresholded": model.thresholded,
            "clamp_negative": model.clamp_negative,
        }

        paths = [
            self.write_frame(SUBSPACE_FILE, subspace_frame),
            self.write_frame(SCREE_FILE, scree_frame),
            self.write_model(AFFINITY_FILE, affinity),
            self.write_json(MASK_FILE, mask_document),
            self.write_json(BASIS_FILE, basis_document),
            self.write_json(MANIFEST_FILE, manifest),
        ]
        self._logger.info(f"Saved model bundle to {self.root}")
        return paths

    def load_manifest(self) -> dict[str, Any]:
        """Read ``manifest.json``."""
        manifest = self.read_json(MANIFEST_FILE)
        if not isinstance(manifest, dict):
            raise SchemaError(f"{self.path(MANIFEST_FILE)} must hold a JSON object")
        return manifest

    def load(self) -> IntensityModel:
        """Rebuild the fitted model from the bundle.

        Raises:
            FileNotFoundError: If an artifact is missing
            SchemaError: If an artifact is malformed
        """
        manifest = self.load_manifest()
        subspace_frame = self.read_frame(SUBSPACE_FILE)
        scree_frame = self.read_frame(SCREE_FILE)
        u_columns = [column for column in subspace_frame.columns if column != "node"]
        if not u_columns or "sigma" not in scree_frame.columns:
            raise SchemaError(f"{self.root} holds a malformed subspace or scree file")

        meta = manifest.get("subspace", {})
        subspace = SubspaceEstimate(
            u_hat=subspace_frame[u_columns].to_numpy(dtype=np.float64),
            singular_values=scree_frame["sigma"].to_numpy(dtype=np.float64),
            deficient=bool(meta.get("deficient", False)),
            residual=float(meta.get("residual", 0.0)),
        )
        affinity = AffinityResult.from_dict(self.read_json(AFFINITY_FILE))
        basis_document = self.read_json(BASIS_FILE)
        try:
            basis = basis_from_descriptor(basis_document["descriptor"])
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f"Invalid basis document in {self.root}: {e}") from e
        if basis.descriptor_hash != basis_document.get("hash"):
            raise SchemaError("basis descriptor does not match its recorded hash")

        return IntensityModel(
            subspace=subspace,
            affinity=affinity,
            basis=basis,
            thresholded=bool(manifest.get("thresholded", True)),
            clamp_negative=bool(manifest.get("clamp_negative", False)),
        )
