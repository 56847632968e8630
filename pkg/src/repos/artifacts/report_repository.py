"""Plot-ready exports: intensity grids, anomaly profiles, metrics and sweeps."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from src.models.anomaly_profile import AnomalyProfile
from src.repos.base_repository import BaseFileRepository

GRID_FILE = "grid.csv"
ANOMALY_FILE = "anomaly.csv"
ACTIVITY_FILE = "activity.csv"
METRICS_FILE = "metrics.json"
SWEEP_FILE = "sweep.csv"
RELABEL_FILE = "relabel.json"


class ReportRepository(BaseFileRepository):
    """Writes command outputs other than the fit bundle."""

    def save_grid(
        self,
        pairs: NDArray[np.int64],
        grid: NDArray[np.float64],
        values: NDArray[np.float64],
        name: str = GRID_FILE,
    ) -> Path:
        """Write ``u,v,t,lambda_hat`` rows, pair-major."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        n_points = grid.size
        frame = pd.DataFrame(
            {
                "u": np.repeat(pairs[:, 0], n_points),
                "v": np.repeat(pairs[:, 1], n_points),
                "t": np.tile(grid, pairs.shape[0]),
                "lambda_hat": np.asarray(values).reshape(-1),
            }
        )
        return self.write_frame(name, frame)

    def save_anomaly(self, profile: AnomalyProfile, name: str = ANOMALY_FILE) -> Path:
        """Write ``scale,cell_index,t_start,t_end,score`` rows."""
        frame = pd.DataFrame(
            profile.to_records(), columns=["scale", "cell_index", "t_start", "t_end", "score"]
        )
        return self.write_frame(name, frame)

    def save_activity(self, counts: NDArray[np.int64], name: str = ACTIVITY_FILE) -> Path:
        """Write the per-cell event volume ``cell_index,t_start,t_end,count``."""
        width = 1.0 / counts.size
        cells = np.arange(counts.size)
        frame = pd.DataFrame(
            {"cell_index": cells, "t_start": cells * width, "t_end": (cells + 1) * width, "count": counts}
        )
        return self.write_frame(name, frame)

    def save_metrics(self, metrics: dict[str, Any], name: str = METRICS_FILE) -> Path:
        """Write the metrics document."""
        return self.write_json(name, metrics)

    def save_sweep(self, rows: list[dict[str, Any]], name: str = SWEEP_FILE) -> Path:
        """Write ``levels,mise_linear,mise_thresholded`` rows."""
        frame = pd.DataFrame(rows, columns=["levels", "mise_linear", "mise_thresholded"])
        return self.write_frame(name, frame)

    def save_relabel_map(self, relabel_map: dict[str, int], name: str = RELABEL_FILE) -> Path:
        """Write the raw-id to dense-id map."""
        return self.write_json(name, relabel_map)
