"""Unit tests for environment configuration and the run-config schema.

Run with:
    export ANIE_ENV=unittest && python -m unittest src.config.test_configuration -v
"""

from __future__ import annotations

import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from pydantic import ValidationError

from src.config.configuration import ConfigurationManager
from src.config.models.estimation import EstimationConfig
from src.config.models.run_config import BasisDescriptor, GeneratorConfig, RunConfig
from src.errors import ParameterError


class TestConfigurationManager(unittest.TestCase):
    """Loading the unittest environment file."""

    def setUp(self) -> None:
        """Set up a manager bound to the unittest environment."""
        with patch.dict("os.environ", {"ANIE_ENV": "unittest"}):
            self.manager = ConfigurationManager()

    def test_environment(self) -> None:
        """Test the environment name is taken from ANIE_ENV."""
        self.assertEqual(self.manager.environment, "unittest")

    def test_estimation_section(self) -> None:
        """Test estimation defaults are parsed."""
        estimation = self.manager.get_estimation_config()
        self.assertEqual(estimation.levels, 6)
        self.assertEqual(estimation.rank, 2)
        self.assertEqual(estimation.scree_count, 10)
        self.assertTrue(estimation.exempt_scaling)

    def test_numerics_section(self) -> None:
        numerics = self.manager.get_numerics_config()
        self.assertEqual(numerics.max_iterations, 10000)
        self.assertEqual(numerics.dense_svd_threshold, 256)

    def test_dataset_defaults(self) -> None:
        """Test per-dataset hyperparameters."""
        er = self.manager.get_dataset_defaults("er_blocks")
        self.assertEqual((er.levels, er.rank, er.bins), (8, 1, 128))
        self.assertAlmostEqual(er.bandwidth, 0.005)
        dsbm = self.manager.get_dataset_defaults("dsbm")
        self.assertEqual((dsbm.levels, dsbm.rank, dsbm.bins), (6, 2, 64))
        self.assertEqual(self.manager.get_available_datasets(), ["dsbm", "er_blocks"])

    def test_unknown_dataset(self) -> None:
        with self.assertRaises(ValueError):
            self.manager.get_dataset_defaults("enron")

    def test_synthetic_and_evaluation_sections(self) -> None:
        self.assertEqual(self.manager.get_synthetic_config().dsbm_merge_interval, (0.5, 0.75))
        self.assertEqual(self.manager.get_evaluation_config().quad_points, 1024)

    def test_invalid_environment(self) -> None:
        """Test an unknown ANIE_ENV is rejected."""
        with patch.dict("os.environ", {"ANIE_ENV": "production"}):
            with self.assertRaises(ValueError):
                ConfigurationManager()

    def test_log_level(self) -> None:
        with patch.dict("os.environ", {"ANIE_LOG_LEVEL": "debug"}):
            self.assertEqual(self.manager.get_log_level(), "DEBUG")

    def test_config_dir_supplies_generator_defaults(self) -> None:
        """Test ANIE_CONFIG_DIR is honored and its "synthetic" section fills generator params."""
        synthetic = {
            "er_blocks": {"scale": 3.0, "offset": 0.5},
            "dsbm": {"lambda_intra": 12.0, "lambda_inter": 1.0, "merge_interval": [0.2, 0.4]},
        }
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "unittest.json"
            path.write_text(json.dumps({"synthetic": synthetic, "datasets": {"dsbm": {}}}), encoding="utf-8")
            with patch.dict("os.environ", {"ANIE_ENV": "unittest", "ANIE_CONFIG_DIR": tmp}):
                manager = ConfigurationManager()
            self.assertEqual(manager.get_available_datasets(), ["dsbm"])
            defaults = manager.get_synthetic_config()

            with self.assertRaises(ValueError):
                manager.get_estimation_config()

        dsbm = GeneratorConfig(model="dsbm", n_nodes=4, params={"lambda_inter": 2.0}).typed_params(defaults)
        self.assertEqual(
            dsbm.model_dump(), {"lambda_intra": 12.0, "lambda_inter": 2.0, "merge_interval": (0.2, 0.4)}
        )
        er = GeneratorConfig(model="er_blocks", n_nodes=4).typed_params(defaults)
        self.assertEqual(er.model_dump(), {"scale": 3.0, "offset": 0.5})

    def test_unknown_dataset_lists_known(self) -> None:
        with self.assertRaisesRegex(ValueError, "known: dsbm, er_blocks"):
            self.manager.get_dataset_defaults("enron")

    def test_missing_config_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            with patch.dict("os.environ", {"ANIE_ENV": "unittest", "ANIE_CONFIG_DIR": tmp}):
                manager = ConfigurationManager()
            with self.assertRaises(ValueError):
                manager.get_available_datasets()


class TestEstimationConfig(unittest.TestCase):
    """Range checks and overrides."""

    def test_invalid_values(self) -> None:
        for kwargs in ({"rank": 0}, {"alpha": 1.5}, {"levels": -1}, {"fdr_method": "holm"}):
            with self.subTest(**kwargs):
                with self.assertRaises(ParameterError):
                    EstimationConfig(**kwargs)

    def test_overrides_skip_none(self) -> None:
        config = EstimationConfig().with_overrides(rank=3, alpha=None)
        self.assertEqual(config.rank, 3)
        self.assertEqual(config.alpha, 0.05)


class TestRunConfig(unittest.TestCase):
    """Schema validation of command configuration files."""

    def test_defaults(self) -> None:
        run = RunConfig()
        self.assertEqual(run.basis.kind, "haar")
        self.assertEqual(run.out, "out")
        self.assertIsNone(run.resolved_dataset())

    def test_unknown_key_rejected(self) -> None:
        """Test extra keys are forbidden."""
        with self.assertRaises(ValidationError):
            RunConfig.model_validate({"ranks": 2})

    def test_alpha_range(self) -> None:
        with self.assertRaises(ValidationError):
            RunConfig(alpha=1.2)

    def test_generator_names_dataset(self) -> None:
        run = RunConfig.model_validate({"generator": {"model": "dsbm", "n_nodes": 10}})
        self.assertEqual(run.resolved_dataset(), "dsbm")
        self.assertEqual(RunConfig(dataset="er_blocks").resolved_dataset(), "er_blocks")

    def test_dsbm_needs_even_nodes(self) -> None:
        with self.assertRaises(ValidationError):
            GeneratorConfig(model="dsbm", n_nodes=11)

    def test_dsbm_rates_ordered(self) -> None:
        with self.assertRaises(ValidationError):
            GeneratorConfig(model="dsbm", n_nodes=10, params={"lambda_intra": 1.0, "lambda_inter": 2.0})

    def test_custom_basis_needs_samples(self) -> None:
        with self.assertRaises(ValidationError):
            BasisDescriptor(kind="custom", grid=[0.0, 1.0])
        with self.assertRaises(ValidationError):
            BasisDescriptor(kind="custom", grid=[0.0, 0.5, 0.4], values=[[1.0, 1.0, 1.0]])
        descriptor = BasisDescriptor(kind="custom", grid=[0.0, 1.0], values=[[1.0, 1.0]])
        self.assertEqual(descriptor.kind, "custom")

    def test_haar_takes_no_samples(self) -> None:
        with self.assertRaises(ValidationError):
            BasisDescriptor(kind="haar", J=3, grid=[0.0, 1.0])


if __name__ == "__main__":
    unittest.main()
