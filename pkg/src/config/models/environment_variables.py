"""Environment variable names and accepted values."""

from __future__ import annotations


class ENV_VARS:
    """Constants for environment variable names.

    Example:
        level = os.getenv(ENV_VARS.LOG_LEVEL, "INFO")
    """

    ENVIRONMENT = "ANIE_ENV"
    LOG_LEVEL = "ANIE_LOG_LEVEL"
    CONFIG_DIR = "ANIE_CONFIG_DIR"


VALID_ENVIRONMENTS = ("local", "unittest")
