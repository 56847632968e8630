"""Unit tests for the fit and level-sweep pipelines."""

from __future__ import annotations

import unittest

import numpy as np

from src.algorithms.basis.haar import haar_basis
from src.config.models.estimation import EstimationConfig
from src.data_sources.synthetic.generators import dsbm_ground_truth
from src.data_sources.synthetic.network import generate_network
from src.errors import ParameterError, RankError
from src.pipelines.estimation.fit_pipeline import FitPipeline
from src.pipelines.estimation.level_sweep_pipeline import LevelSweepPipeline
from src.pipelines.evaluation.evaluation_pipeline import EvaluationPipeline


class TestFitPipeline(unittest.TestCase):
    """End-to-end fit on a small DSBM network."""

    def setUp(self) -> None:
        """Sample a network."""
        self.truth = dsbm_ground_truth(20)
        self.stream = generate_network(self.truth, seed=3)
        self.estimation = EstimationConfig(levels=3, rank=2, scree_count=5)

    def test_result_summary(self) -> None:
        outcome = FitPipeline(haar_basis(3), self.estimation).run(self.stream)
        result = outcome.result
        self.assertEqual(result["n_nodes"], 20)
        self.assertEqual(result["basis_size"], 8)
        self.assertEqual(result["rank"], 2)
        self.assertEqual(result["n_events"], self.stream.n_events)
        self.assertFalse(result["cache_hit"])
        self.assertFalse(result["deficient"])
        self.assertLessEqual(result["n_rejections"], result["n_tests"])

    def test_rescales_original_units(self) -> None:
        """Test a stream over [0, 10] fits the same as its normalized copy."""
        stretched = self.stream.with_times(self.stream.times * 10.0, 10.0)
        pipeline = FitPipeline(haar_basis(3), self.estimation)
        fitted = pipeline.run(stretched)
        self.assertTrue(fitted.stream.is_normalized)
        np.testing.assert_allclose(
            fitted.model.coefficients, pipeline.run(self.stream).model.coefficients, atol=1e-9
        )

    def test_linear_estimator_keeps_everything(self) -> None:
        model = FitPipeline(haar_basis(3), self.estimation, thresholded=False).run(self.stream).model
        np.testing.assert_array_equal(model.coefficients, model.affinity.s_hat)

    def test_alpha_zero_keeps_only_scaling(self) -> None:
        estimation = self.estimation.with_overrides(alpha=0.0)
        model = FitPipeline(haar_basis(3), estimation).run(self.stream).model
        self.assertTrue(np.all(model.coefficients[1:] == 0.0))
        np.testing.assert_array_equal(model.coefficients[0], model.affinity.s_hat[0])

    def test_deterministic(self) -> None:
        first = FitPipeline(haar_basis(3), self.estimation, seed=1).run(self.stream).model
        second = FitPipeline(haar_basis(3), self.estimation, seed=1).run(self.stream).model
        np.testing.assert_array_equal(first.subspace.u_hat, second.subspace.u_hat)
        np.testing.assert_array_equal(first.coefficients, second.coefficients)

    def test_rank_above_nodes(self) -> None:
        with self.assertRaises(RankError):
            FitPipeline(haar_basis(3), self.estimation.with_overrides(rank=21)).run(self.stream)


class TestDsbmMergeDetection(unittest.TestCase):
    """Coarse detail coefficients flag the community merge on [0.5, 0.75)."""

    @classmethod
    def setUpClass(cls) -> None:
        """Fit a 40-node DSBM once."""
        stream = generate_network(dsbm_ground_truth(40), seed=11)
        estimation = EstimationConfig(levels=3, rank=2, alpha=0.05, scree_count=5)
        cls.model = FitPipeline(haar_basis(3), estimation, seed=0).run(stream).model

    def test_detail_mask_nonempty(self) -> None:
        affinity = self.model.affinity
        self.assertTrue(affinity.tested[1:].any())
        self.assertTrue(affinity.mask[1:].any())

    def test_merge_coefficients_rejected(self) -> None:
        """Test psi_{0,0} and psi_{1,1} are kept on the diagonal of every community."""
        affinity = self.model.affinity
        for b in (1, 3):
            for p in range(2):
                with self.subTest(b=b, p=p):
                    self.assertTrue(affinity.mask[b, p, p])
                    self.assertEqual(self.model.coefficients[b, p, p], affinity.s_hat[b, p, p])

    def test_merge_coefficient_signs(self) -> None:
        """Test the intra rate is higher before 0.5 and lower on [0.5, 0.75) than after."""
        s_hat = self.model.affinity.s_hat
        np.testing.assert_array_less(0.0, np.diag(s_hat[1]))
        np.testing.assert_array_less(np.diag(s_hat[3]), 0.0)


class TestLevelSweepPipeline(unittest.TestCase):
    """Resolution sweep."""

    def test_rows_per_level(self) -> None:
        truth = dsbm_ground_truth(20)
        stream = generate_network(truth, seed=0)
        evaluation = EvaluationPipeline(truth, patch_size=10, quad_points=256)
        rows = LevelSweepPipeline(EstimationConfig(rank=2, scree_count=5), evaluation).run(stream, [1, 2, 3])
        self.assertEqual([row["levels"] for row in rows], [1, 2, 3])
        for row in rows:
            self.assertGreaterEqual(row["mise_linear"], 0.0)
            self.assertGreaterEqual(row["mise_thresholded"], 0.0)

    def test_needs_levels(self) -> None:
        evaluation = EvaluationPipeline(dsbm_ground_truth(4), patch_size=4, quad_points=16)
        with self.assertRaises(ParameterError):
            LevelSweepPipeline(EstimationConfig(), evaluation).run(generate_network(dsbm_ground_truth(4)), [])


if __name__ == "__main__":
    unittest.main()
