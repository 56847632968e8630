"""Edge-list CSV loader.

Files are UTF-8 CSV with a header naming the source, target and time columns
(``u,v,t`` by default); extra columns such as message weights are ignored and
every row counts as one event. An optional JSON sidecar next to the file
(same stem, ``.json``) supplies ``n_nodes``, ``horizon`` and directedness.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from src.data_sources.base.event_data_source import EventDataSource
from src.errors import EventValidationError, ParseError, SchemaError
from src.models.documents import EventSidecar
from src.models.event_stream import EventStream


class EdgeListHeaders:
    """Default column names of an edge-list CSV."""

    SOURCE = "u"
    TARGET = "v"
    TIME = "t"


@dataclass(frozen=True)
class EdgeListFormat:
    """Column layout of an edge-list file."""

    source_column: str = EdgeListHeaders.SOURCE
    target_column: str = EdgeListHeaders.TARGET
    time_column: str = EdgeListHeaders.TIME
    delimiter: str = ","

    @property
    def required_headers(self) -> list[str]:
        """Columns every file must have."""
        return [self.source_column, self.target_column, self.time_column]


def sidecar_path(path: str | Path) -> Path:
    """Sidecar location of an events file: same stem, ``.json`` suffix."""
    return Path(path).with_suffix(".json")


class CsvEventSource(EventDataSource):
    """Loads one edge-list CSV into an EventStream.

    Raw node ids must be dense integers ``0..N-1`` unless ``relabel`` is set, in
    which case ids of any spelling are mapped to ``0..N-1`` in sorted order and
    the map is available as ``relabel_map`` after loading.
    """

    def __init__(
        self,
        path: str | Path,
        edge_format: EdgeListFormat | None = None,
        n_nodes: int | None = None,
        horizon: float | None = None,
        directed: bool | None = None,
        relabel: bool = False,
        logger: logging.Logger | None = None,
    ) -> None:
        """Initialize the loader.

        Args:
            path: CSV file
            edge_format: Column layout (defaults to ``u,v,t``)
            n_nodes: Node count; overrides the sidecar, else 1 + max id
            horizon: Observation horizon T; overrides the sidecar, else the last timestamp
            directed: Directedness; overrides the sidecar, else directed
            relabel: Map raw ids to dense integers
            logger: Optional logger
        """
        self.path = Path(path)
        self.edge_format = edge_format or EdgeListFormat()
        self.n_nodes = n_nodes
        self.horizon = horizon
        self.directed = directed
        self.relabel = relabel
        self.relabel_map: dict[str, int] = {}
        self.logger = logger or logging.getLogger(__name__)

    @property
    def name(self) -> str:
        return f"csv:{self.path.name}"

    def read_sidecar(self) -> EventSidecar:
        """Read the JSON sidecar, or defaults when there is none.

        Raises:
            SchemaError: If the sidecar does not match its schema
        """
        path = sidecar_path(self.path)
        if not path.exists():
            return EventSidecar()
        try:
            return EventSidecar.model_validate_json(path.read_text(encoding="utf-8"))
        except ValidationError as e:
            raise SchemaError(f"Invalid events sidecar {path}: {e}") from e

    def load(self) -> EventStream:
        """Load and validate the file.

        Returns:
            EventStream sorted by time (stable), mirrored if undirected

        Raises:
            FileNotFoundError: If the file doesn't exist
            ParseError: If a row cannot be parsed (with its line number)
            EventValidationError: If a node id or timestamp is negative
            SchemaError: If the sidecar is malformed
        """
        if not self.path.exists():
            raise FileNotFoundError(f"Events file not found: {self.path}")
        sidecar = self.read_sidecar()
        self.logger.info(f"Loading events from {self.path}")

        raw_sources, raw_targets, times = self._read_rows()

        if self.relabel:
            sources, targets = self._relabel(raw_sources, raw_targets)
        else:
            sources = np.asarray([int(u) for u in raw_sources], dtype=np.int64)
            targets = np.asarray([int(v) for v in raw_targets], dtype=np.int64)
        time_array = np.asarray(times, dtype=np.float64)

        n_nodes = self.n_nodes or sidecar.n_nodes
        if n_nodes is None:
            n_nodes = int(max(sources.max(initial=-1), targets.max(initial=-1))) + 1
        self._report_unused_ids(sources, targets, n_nodes)

        directed = self.directed if self.directed is not None else sidecar.directed
        if not directed and not sidecar.symmetrized:
            off_diagonal = sources != targets
            sources, targets, time_array = (
                np.concatenate([sources, targets[off_diagonal]]),
                np.concatenate([targets, sources[off_diagonal]]),
                np.concatenate([time_array, time_array[off_diagonal]]),
            )

        if time_array.size > 1 and np.any(np.diff(time_array) < 0):
            self.logger.info(f"Events in {self.path.name} were not in time order; sorted them (stable)")
        order = np.argsort(time_array, kind="stable")

        horizon = self.horizon if self.horizon is not None else sidecar.horizon
        if horizon is None:
            horizon = float(time_array.max()) if time_array.size else 0.0

        stream = EventStream(
            n_nodes=n_nodes,
            horizon=horizon,
            sources=sources[order],
            targets=targets[order],
            times=time_array[order],
            directed=directed,
        )
        if stream.self_loop_count:
            self.logger.info(f"Stream has {stream.self_loop_count} self-loop events")
        self.logger.info(
            f"Loaded {stream.n_events} events on {stream.n_nodes} nodes, horizon {stream.horizon}"
        )
        return stream

    def _read_rows(self) -> tuple[list[str], list[str], list[float]]:
        fmt = self.edge_format
        sources: list[str] = []
        targets: list[str] = []
        times: list[float] = []
        try:
            with open(self.path, encoding="utf-8", newline="") as f:
                csv_reader = csv.DictReader(f, delimiter=fmt.delimiter)
                if csv_reader.fieldnames is None:
                    return sources, targets, times
                missing_headers = [h for h in fmt.required_headers if h not in csv_reader.fieldnames]
                if missing_headers:
                    raise ParseError(f"missing required headers: {missing_headers}", line_number=1)

                for row_num, row in enumerate(csv_reader, start=2):  # Start at 2 for header row
                    u, v, t = self._parse_row(row, row_num)
                    sources.append(u)
                    targets.append(v)
                    times.append(t)
        except csv.Error as e:
            raise ParseError(f"invalid CSV format in {self.path}: {e}") from e
        return sources, targets, times

    def _parse_row(self, row: dict[str, str | None], row_num: int) -> tuple[str, str, float]:
        fmt = self.edge_format
        values = [row.get(column) for column in fmt.required_headers]
        if any(value is None or value.strip() == "" for value in values):
            raise ParseError(f"expected columns {fmt.required_headers}, got {row}", line_number=row_num)
        u, v, t_text = (value.strip() for value in values if value is not None)
        try:
            t = float(t_text)
        except ValueError as e:
            raise ParseError(f"timestamp {t_text!r} is not a number", line_number=row_num) from e
        if not math.isfinite(t):
            raise ParseError(f"timestamp {t_text!r} is not finite", line_number=row_num)
        if t < 0:
            raise EventValidationError(f"line {row_num}: negative timestamp {t}")

        if not self.relabel:
            for label, node in (("source", u), ("target", v)):
                try:
                    node_id = int(node)
                except ValueError as e:
                    raise ParseError(f"{label} id {node!r} is not an integer", line_number=row_num) from e
                if node_id < 0:
                    raise EventValidationError(f"line {row_num}: negative {label} id {node_id}")
        return u, v, t

    def _relabel(
        self, raw_sources: list[str], raw_targets: list[str]
    ) -> tuple[np.ndarray, np.ndarray]:
        labels = set(raw_sources) | set(raw_targets)
        if all(_is_int(label) for label in labels):
            ordered = sorted(labels, key=int)
        else:
            ordered = sorted(labels)
        self.relabel_map = {label: index for index, label in enumerate(ordered)}
        self.logger.info(f"Relabeled {len(ordered)} raw node ids to 0..{len(ordered) - 1}")
        sources = np.asarray([self.relabel_map[u] for u in raw_sources], dtype=np.int64)
        targets = np.asarray([self.relabel_map[v] for v in raw_targets], dtype=np.int64)
        return sources, targets

    def _report_unused_ids(self, sources: np.ndarray, targets: np.ndarray, n_nodes: int) -> None:
        used = np.unique(np.concatenate([sources, targets]))
        if 0 < used.size < n_nodes and not self.relabel:
            self.logger.info(
                f"{n_nodes - used.size} of {n_nodes} node ids never appear; "
                "use relabel to map raw ids to a dense range"
            )


def _is_int(text: str) -> bool:
    try:
        int(text)
    except ValueError:
        return False
    return True


def load_events(
    path: str | Path,
    edge_format: EdgeListFormat | None = None,
    n_nodes: int | None = None,
    directed: bool | None = None,
    horizon: float | None = None,
) -> EventStream:
    """Load an edge-list CSV; see CsvEventSource."""
    return CsvEventSource(
        path, edge_format=edge_format, n_nodes=n_nodes, horizon=horizon, directed=directed
    ).load()
