"""On-disk cache of empirical coefficients.

An entry is keyed by the basis descriptor hash and the event stream
fingerprint, so a cached CoeffSet is reused only for the exact same inputs.
"""

from __future__ import annotations

from pathlib import Path

from src.errors import SchemaError
from src.models.coeff_set import CoeffSet
from src.repos.base_repository import BaseFileRepository


class CoefficientCacheRepository(BaseFileRepository):
    """Stores CoeffSet dumps under ``coeffs-<basis>-<stream>.json``."""

    @staticmethod
    def cache_name(basis_hash: str, stream_fingerprint: str, include_self_loops: bool) -> str:
        """File name of a cache entry."""
        loops = "loops" if include_self_loops else "noloops"
        return f"coeffs-{basis_hash[:16]}-{stream_fingerprint[:16]}-{loops}.json"

    def save(
        self, coeffs: CoeffSet, stream_fingerprint: str, include_self_loops: bool
    ) -> Path:
        """Write one cache entry."""
        name = self.cache_name(coeffs.basis_hash, stream_fingerprint, include_self_loops)
        return self.write_json(
            name,
            {
                "stream_fingerprint": stream_fingerprint,
                "include_self_loops": include_self_loops,
                "coefficients": coeffs.to_dict(),
            },
        )

    def load(
        self, basis_hash: str, stream_fingerprint: str, include_self_loops: bool
    ) -> CoeffSet | None:
        """Cached coefficients, or None on a miss or a stale entry."""
        name = self.cache_name(basis_hash, stream_fingerprint, include_self_loops)
        if not self.exists(name):
            return None
        try:
            document = self.read_json(name)
            coeffs = CoeffSet.from_dict(document["coefficients"])
            fingerprint = document["stream_fingerprint"]
        except (SchemaError, KeyError, TypeError) as e:
            self._logger.warning(f"Ignoring unreadable cache entry {name}: {e}")
            return None
        if coeffs.basis_hash != basis_hash or fingerprint != stream_fingerprint:
            self._logger.warning(f"Ignoring stale cache entry {name}")
            return None
        self._logger.info(f"Reusing cached coefficients {name}")
        return coeffs
