"""Event stream data model."""

from __future__ import annotations

import hashlib
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from src.errors import EventValidationError

logger = logging.getLogger(__name__)


def _frozen(values: Any, dtype: type) -> NDArray[Any]:
    array = np.array(values, dtype=dtype, copy=True).reshape(-1)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class EventStream:
    """Time-ordered interaction events ``(u, v, t)`` on nodes ``0..N-1`` over ``[0, T]``.

    The three event arrays are parallel and read-only. For an undirected stream
    (``directed=False``) every event ``(u, v, t)`` with ``u != v`` is stored
    together with its mirror ``(v, u, t)``; the loader does the mirroring.

    Self-loops are kept in the stream; coefficient computations drop them by
    default.
    """

    n_nodes: int
    horizon: float
    sources: NDArray[np.int64]
    targets: NDArray[np.int64]
    times: NDArray[np.float64]
    directed: bool = True
    _fingerprint: list[str] = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Freeze arrays and validate the event model.

        Raises:
            EventValidationError: If any invariant is violated
        """
        object.__setattr__(self, "sources", _frozen(self.sources, np.int64))
        object.__setattr__(self, "targets", _frozen(self.targets, np.int64))
        object.__setattr__(self, "times", _frozen(self.times, np.float64))
        object.__setattr__(self, "horizon", float(self.horizon))

        if self.n_nodes < 1:
            raise EventValidationError(f"n_nodes must be >= 1, got {self.n_nodes}")
        if not np.isfinite(self.horizon) or self.horizon < 0:
            raise EventValidationError(f"horizon must be finite and >= 0, got {self.horizon}")
        n = self.times.size
        if self.sources.size != n or self.targets.size != n:
            raise EventValidationError(
                f"sources, targets and times must have equal length "
                f"({self.sources.size}, {self.targets.size}, {n})"
            )
        if n == 0:
            return
        for name, nodes in (("source", self.sources), ("target", self.targets)):
            if nodes.min() < 0 or nodes.max() >= self.n_nodes:
                raise EventValidationError(
                    f"{name} node ids must lie in [0, {self.n_nodes}), "
                    f"got range [{nodes.min()}, {nodes.max()}]"
                )
        if not np.all(np.isfinite(self.times)):
            raise EventValidationError("timestamps must be finite")
        if self.times[0] < 0 or self.times[-1] > self.horizon:
            raise EventValidationError(
                f"timestamps must lie in [0, {self.horizon}], "
                f"got range [{self.times.min()}, {self.times.max()}]"
            )
        if np.any(np.diff(self.times) < 0):
            raise EventValidationError("timestamps must be non-decreasing")
        if not self.directed and not self._is_swap_invariant():
            raise EventValidationError(
                "undirected stream is not symmetrized: some events lack their mirror"
            )

    def _is_swap_invariant(self) -> bool:
        forward = np.lexsort((self.times, self.targets, self.sources))
        mirrored = np.lexsort((self.times, self.sources, self.targets))
        return bool(
            np.array_equal(self.sources[forward], self.targets[mirrored])
            and np.array_equal(self.targets[forward], self.sources[mirrored])
            and np.array_equal(self.times[forward], self.times[mirrored])
        )

    @classmethod
    def from_events(
        cls,
        events: Iterable[tuple[int, int, float]],
        n_nodes: int,
        horizon: float | None = None,
        directed: bool = True,
    ) -> EventStream:
        """Build a stream from unsorted ``(u, v, t)`` triples.

        Events are stably sorted by time. The horizon defaults to the last
        timestamp (0 for an empty stream).
        """
        triples = list(events)
        sources = np.array([e[0] for e in triples], dtype=np.int64)
        targets = np.array([e[1] for e in triples], dtype=np.int64)
        times = np.array([e[2] for e in triples], dtype=np.float64)
        order = np.argsort(times, kind="stable")
        if horizon is None:
            horizon = float(times.max()) if times.size else 0.0
        return cls(
            n_nodes=n_nodes,
            horizon=horizon,
            sources=sources[order],
            targets=targets[order],
            times=times[order],
            directed=directed,
        )

    @classmethod
    def empty(cls, n_nodes: int, horizon: float = 1.0, directed: bool = True) -> EventStream:
        """Create a stream without events."""
        return cls(
            n_nodes=n_nodes,
            horizon=horizon,
            sources=np.empty(0, dtype=np.int64),
            targets=np.empty(0, dtype=np.int64),
            times=np.empty(0, dtype=np.float64),
            directed=directed,
        )

    @property
    def n_events(self) -> int:
        """Number of stored events (mirrors included)."""
        return int(self.times.size)

    @property
    def is_normalized(self) -> bool:
        """Whether timestamps are already on the unit interval."""
        return self.horizon == 1.0

    @property
    def self_loop_count(self) -> int:
        """Number of ``u == v`` events."""
        return int(np.count_nonzero(self.sources == self.targets))

    def pair_events(
        self, include_self_loops: bool = False
    ) -> tuple[NDArray[np.int64], NDArray[np.int64], NDArray[np.float64]]:
        """Return the event arrays, optionally without self-loops."""
        if include_self_loops:
            return self.sources, self.targets, self.times
        keep = self.sources != self.targets
        return self.sources[keep], self.targets[keep], self.times[keep]

    def with_times(self, times: NDArray[np.float64], horizon: float) -> EventStream:
        """Copy with replaced timestamps and horizon; event order is kept."""
        return replace(self, times=times, horizon=horizon)

    def events(self) -> Iterator[tuple[int, int, float]]:
        """Iterate over ``(u, v, t)`` triples in stored order."""
        for u, v, t in zip(self.sources.tolist(), self.targets.tolist(), self.times.tolist(), strict=True):
            yield u, v, t

    def to_dataframe(self) -> pd.DataFrame:
        """Events as a DataFrame with columns ``u, v, t``."""
        return pd.DataFrame({"u": self.sources, "v": self.targets, "t": self.times})

    def fingerprint(self) -> str:
        """Content hash of the stream, used to key coefficient caches."""
        if not self._fingerprint:
            digest = hashlib.sha256()
            digest.update(f"{self.n_nodes}|{self.horizon!r}|{self.directed}".encode())
            digest.update(self.sources.tobytes())
            digest.update(self.targets.tobytes())
            digest.update(self.times.tobytes())
            self._fingerprint.append(digest.hexdigest())
        return self._fingerprint[0]
