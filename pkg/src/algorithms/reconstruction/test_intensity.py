"""Unit tests for reconstruction, the oracle model and MISE."""

from __future__ import annotations

import unittest
from dataclasses import replace

import numpy as np

from src.algorithms.basis.haar import haar_basis
from src.algorithms.reconstruction.intensity import (
    affinity_density,
    evaluate_grid,
    intensity_at,
    model_evaluator,
)
from src.algorithms.reconstruction.metrics import mise, pair_patch
from src.algorithms.reconstruction.oracle import oracle_model
from src.data_sources.synthetic.generators import constant_ground_truth, dsbm_ground_truth
from src.errors import DomainError, ParameterError
from src.utils.quadrature import midpoint_grid


class TestReconstruction(unittest.TestCase):
    """Pointwise intensities of a model built from the truth."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.truth = dsbm_ground_truth(6, lambda_intra=8.0, lambda_inter=2.0)
        self.model = oracle_model(self.truth, haar_basis(3))

    def test_recovers_block_rates(self) -> None:
        self.assertAlmostEqual(intensity_at(self.model, 0, 1, 0.2), 8.0, places=10)
        self.assertAlmostEqual(intensity_at(self.model, 0, 1, 0.6), 2.0, places=10)
        self.assertAlmostEqual(intensity_at(self.model, 0, 4, 0.2), 2.0, places=10)

    def test_grid_matches_truth(self) -> None:
        pairs = pair_patch(6, 6)
        grid = np.linspace(0.0, 1.0, 33)
        np.testing.assert_allclose(
            evaluate_grid(self.model, pairs, grid), self.truth.evaluate_pairs(pairs, grid), atol=1e-10
        )

    def test_affinity_density_shape(self) -> None:
        self.assertEqual(affinity_density(self.model, 0.5).shape, (2, 2))

    def test_clamping(self) -> None:
        flipped = replace(self.model, clamp_negative=True)
        self.assertGreaterEqual(float(evaluate_grid(flipped, np.array([[0, 1]]), midpoint_grid(8)).min()), 0.0)

    def test_out_of_range_inputs(self) -> None:
        with self.assertRaises(ParameterError):
            intensity_at(self.model, 0, 6, 0.5)
        with self.assertRaises(DomainError):
            intensity_at(self.model, 0, 1, 1.5)


class TestMise(unittest.TestCase):
    """Integrated squared error over a pair patch."""

    def test_truth_against_itself_is_zero(self) -> None:
        truth = dsbm_ground_truth(8)
        model = oracle_model(truth, haar_basis(2))
        value = mise(truth.evaluate_pairs, model_evaluator(model), pair_patch(8, 8), quad_points=256)
        self.assertLess(value, 1e-20)

    def test_constant_offset(self) -> None:
        truth = constant_ground_truth(4, 3.0)
        shifted = constant_ground_truth(4, 5.0)
        value = mise(truth.evaluate_pairs, shifted.evaluate_pairs, pair_patch(4, 4), quad_points=16)
        self.assertAlmostEqual(value, 4.0)

    def test_chunking_does_not_change_the_result(self) -> None:
        truth = dsbm_ground_truth(10)
        other = constant_ground_truth(10, 4.0)
        pairs = pair_patch(10, 10)
        whole = mise(truth.evaluate_pairs, other.evaluate_pairs, pairs, quad_points=64)
        chunked = mise(truth.evaluate_pairs, other.evaluate_pairs, pairs, quad_points=64, chunk=7)
        self.assertAlmostEqual(whole, chunked, places=12)

    def test_pair_patch(self) -> None:
        pairs = pair_patch(5, 2)
        np.testing.assert_array_equal(pairs, [[0, 0], [0, 1], [1, 0], [1, 1]])
        self.assertEqual(pair_patch(3, 100).shape, (9, 2))
        with self.assertRaises(ParameterError):
            pair_patch(3, 0)

    def test_invalid_quadrature(self) -> None:
        truth = constant_ground_truth(2, 1.0)
        with self.assertRaises(ParameterError):
            mise(truth.evaluate_pairs, truth.evaluate_pairs, pair_patch(2, 2), quad_points=0)


if __name__ == "__main__":
    unittest.main()
