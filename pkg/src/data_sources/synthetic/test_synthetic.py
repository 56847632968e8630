"""Unit tests for the synthetic generators and samplers."""

from __future__ import annotations

import unittest
from unittest.mock import patch

import numpy as np

from src.config.configuration import CONFIG
from src.config.models.run_config import GeneratorConfig
from src.config.models.synthetic import SyntheticConfig
from src.data_sources.synthetic.generators import (
    constant_ground_truth,
    dsbm_ground_truth,
    er_blocks_ground_truth,
    er_blocks_intensity,
)
from src.data_sources.synthetic.network import generate_network
from src.data_sources.synthetic.sampling import sample_piecewise, sample_thinning
from src.data_sources.synthetic.synthetic_source import SyntheticEventSource, build_ground_truth
from src.errors import BoundViolationError, ParameterError
from src.models.intensity import PiecewiseConstantIntensity


class TestGenerators(unittest.TestCase):
    """Ground-truth construction."""

    def test_er_blocks_rate(self) -> None:
        """Test the cumulative step rate is clamped at zero."""
        rate = er_blocks_intensity()
        self.assertEqual(float(rate.evaluate(0.05)), 0.0)
        self.assertEqual(float(rate.evaluate(0.11)), 4.0)
        self.assertEqual(float(rate.evaluate(0.14)), 0.0)
        self.assertAlmostEqual(float(rate.evaluate(0.9)), 3.0)
        self.assertGreaterEqual(float(rate.values.min()), 0.0)

    def test_er_blocks_scale_and_offset(self) -> None:
        rate = er_blocks_intensity(scale=2.0, offset=1.0)
        self.assertEqual(float(rate.evaluate(0.11)), 9.0)
        with self.assertRaises(ParameterError):
            er_blocks_intensity(scale=0.0)

    def test_er_blocks_single_community(self) -> None:
        truth = er_blocks_ground_truth(4)
        np.testing.assert_allclose(truth.u_true, np.full((4, 1), 0.5))

    def test_dsbm_layout(self) -> None:
        truth = dsbm_ground_truth(6)
        np.testing.assert_array_equal(truth.assignment, [0, 0, 0, 1, 1, 1])
        self.assertEqual(float(truth.pair_intensity(0, 1).evaluate(0.2)), 8.0)
        self.assertEqual(float(truth.pair_intensity(0, 1).evaluate(0.6)), 2.0)
        self.assertEqual(float(truth.pair_intensity(0, 4).evaluate(0.2)), 2.0)

    def test_dsbm_invalid(self) -> None:
        with self.assertRaises(ParameterError):
            dsbm_ground_truth(5)
        with self.assertRaises(ParameterError):
            dsbm_ground_truth(4, lambda_intra=1.0, lambda_inter=2.0)
        with self.assertRaises(ParameterError):
            dsbm_ground_truth(4, merge_interval=(0.8, 0.2))

    def test_build_from_config(self) -> None:
        truth = build_ground_truth(GeneratorConfig(model="dsbm", n_nodes=4, params={"lambda_intra": 5.0}))
        self.assertEqual(truth.generator["params"]["lambda_intra"], 5.0)
        self.assertEqual(build_ground_truth(GeneratorConfig(model="er_blocks", n_nodes=3)).n_blocks, 1)

    def test_build_takes_missing_params_from_environment(self) -> None:
        """Test the "synthetic" config section supplies params a run config leaves out."""
        synthetic = SyntheticConfig(dsbm_lambda_intra=9.0, dsbm_merge_interval=(0.25, 0.5))
        with patch.object(CONFIG, "get_synthetic_config", return_value=synthetic):
            truth = build_ground_truth(GeneratorConfig(model="dsbm", n_nodes=4))
        self.assertEqual(truth.generator["params"]["lambda_intra"], 9.0)
        self.assertEqual(float(truth.pair_intensity(0, 1).evaluate(0.3)), 2.0)
        self.assertEqual(float(truth.pair_intensity(0, 1).evaluate(0.6)), 9.0)

    def test_build_with_explicit_defaults(self) -> None:
        config = GeneratorConfig(model="er_blocks", n_nodes=3, params={"offset": 1.0})
        truth = build_ground_truth(config, SyntheticConfig(er_scale=2.0))
        self.assertEqual(truth.generator["params"], {"scale": 2.0, "offset": 1.0})
        self.assertEqual(float(truth.pair_intensity(0, 1).evaluate(0.11)), 9.0)


class TestSamplers(unittest.TestCase):
    """Exact Poisson samplers."""

    def test_piecewise_counts(self) -> None:
        """Test the mean count matches the integrated rate."""
        intensity = PiecewiseConstantIntensity.from_steps([0.0, 0.5, 1.0], [2.0, 8.0])
        counts = [sample_piecewise(intensity, seed).size for seed in range(2000)]
        self.assertAlmostEqual(float(np.mean(counts)), 5.0, delta=0.2)

    def test_piecewise_sorted_and_deterministic(self) -> None:
        intensity = PiecewiseConstantIntensity.constant(20.0)
        times = sample_piecewise(intensity, 3)
        self.assertTrue(np.all(np.diff(times) >= 0))
        self.assertTrue(np.all((times >= 0) & (times <= 1)))
        np.testing.assert_array_equal(times, sample_piecewise(intensity, 3))

    def test_thinning_matches_rate(self) -> None:
        def rate(t: np.ndarray) -> np.ndarray:
            return np.where(t < 0.5, 2.0, 8.0)

        counts = [sample_thinning(rate, 8.0, seed).size for seed in range(2000)]
        self.assertAlmostEqual(float(np.mean(counts)), 5.0, delta=0.2)

    def test_thinning_bound_violation(self) -> None:
        with self.assertRaises(BoundViolationError):
            sample_thinning(lambda t: np.full_like(t, 100.0), 50.0, 0)
        with self.assertRaises(ParameterError):
            sample_thinning(lambda t: t, -1.0, 0)


class TestGenerateNetwork(unittest.TestCase):
    """Network sampling."""

    def test_deterministic_per_seed(self) -> None:
        truth = dsbm_ground_truth(10)
        first = generate_network(truth, seed=4)
        self.assertEqual(first.fingerprint(), generate_network(truth, seed=4).fingerprint())
        self.assertNotEqual(first.fingerprint(), generate_network(truth, seed=5).fingerprint())

    def test_no_self_loops_and_normalized(self) -> None:
        stream = generate_network(dsbm_ground_truth(10), seed=0)
        self.assertEqual(stream.self_loop_count, 0)
        self.assertTrue(stream.is_normalized)
        self.assertTrue(stream.directed)

    def test_total_count_matches_truth(self) -> None:
        """Test the event count is near the expected 20 * (9 * 6.5 + 10 * 2)."""
        stream = generate_network(dsbm_ground_truth(20), seed=1)
        self.assertAlmostEqual(stream.n_events, 1570, delta=200)

    def test_zero_rate(self) -> None:
        stream = generate_network(constant_ground_truth(3, 0.0), seed=0)
        self.assertEqual(stream.n_events, 0)
        self.assertEqual(stream.n_nodes, 3)

    def test_source_uses_config_seed(self) -> None:
        config = GeneratorConfig(model="er_blocks", n_nodes=5, seed=7)
        source = SyntheticEventSource(config)
        self.assertEqual(source.name, "synthetic:er_blocks")
        self.assertEqual(
            source.load().fingerprint(), generate_network(source.truth, seed=7).fingerprint()
        )


if __name__ == "__main__":
    unittest.main()
