"""Limiting cases of the thresholded estimator.

With alpha = 1 nothing is zeroed and the Haar reconstruction at level J is
the projected histogram with 2^J bins. With alpha = 0 only the scaling
coefficient survives and every pair's estimate is flat.
"""

from __future__ import annotations

# IMPORTANT: Set environment variables BEFORE importing any src modules
from tests.integration.common_setup import setup_test_environment

setup_test_environment()

import numpy as np
import pytest

from src.algorithms.baselines.estimators import BaselineModel, ipp_hist
from src.algorithms.reconstruction.intensity import evaluate_grid
from src.algorithms.reconstruction.metrics import pair_patch
from src.data_sources.synthetic.generators import dsbm_ground_truth
from src.data_sources.synthetic.network import generate_network
from tests.integration.common_setup import fit_haar


@pytest.fixture(scope="module")
def dsbm_stream():
    return generate_network(dsbm_ground_truth(40), seed=8)


@pytest.mark.integration
class TestReconstructionLimits:
    """alpha = 1 and alpha = 0."""

    def test_alpha_one_matches_histogram(self, dsbm_stream):
        """Test agreement with the 64-bin projected histogram at 1000 interior times."""
        outcome = fit_haar(dsbm_stream, levels=6, rank=2, alpha=1.0)
        model = outcome.model
        baseline = BaselineModel(naive=ipp_hist(outcome.stream, 64), subspace=model.subspace)

        times = np.sort(np.random.default_rng(1).uniform(0.0, 1.0, 1000))
        cells = times * 64
        assert np.min(np.abs(cells - np.round(cells))) > 1e-9

        pairs = pair_patch(model.n_nodes, 12)
        np.testing.assert_allclose(
            evaluate_grid(model, pairs, times), baseline.evaluate_grid(pairs, times), rtol=0, atol=1e-10
        )

    def test_alpha_zero_is_constant(self, dsbm_stream):
        """Test every pair's estimate is flat over a 256-point grid."""
        model = fit_haar(dsbm_stream, levels=6, rank=2, alpha=0.0).model
        grid = np.linspace(0.0, 1.0, 256)
        values = evaluate_grid(model, pair_patch(model.n_nodes, 40), grid)
        assert float(np.max(values.max(axis=1) - values.min(axis=1))) < 1e-12

    def test_grid_invariant_to_pair_order(self, dsbm_stream):
        model = fit_haar(dsbm_stream, levels=4, rank=2).model
        pairs = pair_patch(model.n_nodes, 6)
        order = np.random.default_rng(3).permutation(pairs.shape[0])
        grid = np.linspace(0.0, 1.0, 33)
        np.testing.assert_array_equal(
            evaluate_grid(model, pairs, grid)[order], evaluate_grid(model, pairs[order], grid)
        )
