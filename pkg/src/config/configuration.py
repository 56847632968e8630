"""Generic configuration management for multiple environments."""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from src.config.models.environment_variables import ENV_VARS, VALID_ENVIRONMENTS
from src.config.models.estimation import EstimationConfig, NumericsConfig
from src.config.models.evaluation import DatasetDefaults, EvaluationConfig
from src.config.models.synthetic import SyntheticConfig


class ConfigurationManager:
    """Generic configuration manager for multiple environments."""

    def __init__(self) -> None:
        """Initialize configuration manager.

        Selects the environment from ANIE_ENV (default "local"), loads an
        optional ``.{env}.env`` file from the working directory, and points the
        JSON loader at ANIE_CONFIG_DIR or the packaged environments directory.

        Raises:
            ValueError: If ANIE_ENV has an invalid value
        """
        self._environment = self._resolve_environment()
        self._load_environment_file()
        default_dir = Path(__file__).parent / "environments"
        self._config_dir = Path(os.getenv(ENV_VARS.CONFIG_DIR, str(default_dir)))
        self._config_cache: dict[str, Any] = {}
        self._cache_loaded = False
        self._lock = threading.RLock()

    @staticmethod
    def _resolve_environment() -> str:
        """Read and validate ANIE_ENV.

        Raises:
            ValueError: If ANIE_ENV is set to an unknown environment
        """
        environment = os.getenv(ENV_VARS.ENVIRONMENT, "local").lower()
        if environment not in VALID_ENVIRONMENTS:
            raise ValueError(
                f"Invalid {ENV_VARS.ENVIRONMENT} value: {environment}. "
                f"Valid values are: {', '.join(VALID_ENVIRONMENTS)}"
            )
        return environment

    def _load_environment_file(self) -> None:
        """Load ``.{env}.env`` from the working directory when it exists.

        Values already present in the process environment win.
        """
        env_path = Path.cwd() / f".{self._environment}.env"
        if env_path.exists():
            load_dotenv(env_path, override=False)

    def get_estimation_config(self) -> EstimationConfig:
        """Get estimation defaults for the current environment.

        Returns:
            EstimationConfig for the current environment
        """
        return EstimationConfig.from_config_data(self._section("estimation"))

    def get_numerics_config(self) -> NumericsConfig:
        """Get numerical tolerances for the current environment.

        Returns:
            NumericsConfig for the current environment
        """
        return NumericsConfig.from_config_data(self._section("numerics"))

    def get_synthetic_config(self) -> SyntheticConfig:
        """Get synthetic generator defaults for the current environment.

        Returns:
            SyntheticConfig for the current environment
        """
        return SyntheticConfig.from_config_data(self._section("synthetic"))

    def get_evaluation_config(self) -> EvaluationConfig:
        """Get MISE evaluation settings for the current environment.

        Returns:
            EvaluationConfig for the current environment
        """
        return EvaluationConfig.from_config_data(self._section("evaluation"))

    def get_dataset_defaults(self, dataset: str) -> DatasetDefaults:
        """Get the tuned hyperparameters of a synthetic dataset.

        Args:
            dataset: Dataset key ("er_blocks" or "dsbm")

        Returns:
            DatasetDefaults for the dataset

        Raises:
            ValueError: If the dataset has no entry
        """
        available = self.get_available_datasets()
        if dataset not in available:
            raise ValueError(
                f"No hyperparameter defaults for dataset {dataset!r}; known: {', '.join(available)}"
            )
        return DatasetDefaults.from_config_data(dataset, self._section("datasets")[dataset])

    def get_available_datasets(self) -> list[str]:
        """Get list of datasets with tuned hyperparameters.

        Returns:
            List of dataset names
        """
        return sorted(self._load_config().get("datasets", {}))

    def get_log_level(self) -> str:
        """Get the log level name from ANIE_LOG_LEVEL (default INFO)."""
        return os.getenv(ENV_VARS.LOG_LEVEL, "INFO").upper()

    def _section(self, name: str) -> dict[str, Any]:
        """Return a top-level section of the environment file.

        Raises:
            ValueError: If the section is missing
        """
        config_data = self._load_config()
        if name not in config_data:
            raise ValueError(f"Configuration section {name!r} not found")
        section: dict[str, Any] = config_data[name]
        return section

    def _load_config(self) -> dict[str, Any]:
        """Load configuration from JSON file with thread-safe caching.

        Returns:
            Configuration dictionary

        Raises:
            ValueError: If configuration file is not found or invalid
        """
        with self._lock:
            # Double-check pattern: check again inside the lock
            if self._cache_loaded and self._config_cache:
                return self._config_cache

            config_file = self._config_dir / f"{self._environment}.json"

            if not config_file.exists():
                raise ValueError(f"Config file not found: {config_file}")

            try:
                with open(config_file, encoding="utf-8") as f:
                    self._config_cache = json.load(f)
                    self._cache_loaded = True
                    return self._config_cache
            except json.JSONDecodeError as e:
                raise ValueError(f"Invalid JSON in config file {config_file}: {e}") from e

    @property
    def environment(self) -> str:
        """Get current environment name."""
        return self._environment


# Global instance
CONFIG = ConfigurationManager()
