"""Monte Carlo checks of the empirical coefficients and the FDR procedure.

Every ordered pair of a constant-rate network is an independent homogeneous
Poisson process, so one large network gives many replicates at once.
"""

from __future__ import annotations

# IMPORTANT: Set environment variables BEFORE importing any src modules
from tests.integration.common_setup import setup_test_environment

setup_test_environment()

import numpy as np
import pytest
from scipy import stats

from src.algorithms.affinity.testing import benjamini_hochberg
from src.algorithms.basis.haar import haar_basis
from src.algorithms.coefficients.projection import project
from src.data_sources.synthetic.generators import constant_ground_truth
from src.data_sources.synthetic.network import generate_network
from tests.integration.common_setup import fit_haar


def pair_coefficients(n_nodes: int, rate: float, levels: int, seed: int) -> np.ndarray:
    """Coefficients of every off-diagonal pair, shape (B, N * (N - 1)); absent entries are 0."""
    stream = generate_network(constant_ground_truth(n_nodes, rate), seed=seed)
    basis = haar_basis(levels)
    coeffs = project(stream, basis)
    dense = np.stack([coeffs.matrix(b).toarray() for b in range(basis.size)])
    off_diagonal = ~np.eye(n_nodes, dtype=bool)
    return dense[:, off_diagonal]


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.statistics
class TestCoefficientMoments:
    """Coefficients are unbiased with variance ``rate * integral(phi^2)``."""

    def test_mean_and_variance(self):
        """Test every Haar coefficient at rate 5, J=3 over 20000 replicates.

        Validates:
        - Scaling coefficient mean is the rate, detail means are 0
        - Every coefficient's variance equals the rate
        """
        rate = 5.0
        values = pair_coefficients(n_nodes=142, rate=rate, levels=3, seed=11)
        replicates = values.shape[1]
        assert replicates >= 20000

        means = values.mean(axis=1)
        centered = values - means[:, None]
        variances = (centered**2).mean(axis=1)
        mean_se = np.sqrt(variances / replicates)
        variance_se = np.sqrt(((centered**4).mean(axis=1) - variances**2) / replicates)

        targets = np.zeros(values.shape[0])
        targets[0] = rate
        assert np.all(np.abs(means - targets) < 4 * mean_se), means
        assert np.all(np.abs(variances - rate) < 4 * variance_se), variances


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.statistics
class TestNullBehaviour:
    """z-scores and rejections when nothing changes over time."""

    def test_null_z_scores_are_standard_normal(self):
        """Test detail z-scores of a constant network over 50 seeds."""
        z_values = []
        for seed in range(50):
            stream = generate_network(constant_ground_truth(200, 10.0), seed=seed)
            affinity = fit_haar(stream, levels=4, rank=1, seed=seed).model.affinity
            z_values.append(affinity.z[1:].ravel())
        z = np.concatenate(z_values)

        assert stats.kstest(z, "norm").pvalue > 0.01
        assert 0.85 <= float(np.var(z)) <= 1.15

    def test_false_discovery_rate(self):
        """Test the mean false-rejection proportion under the null stays near alpha.

        Under the global null every rejection is false, so the proportion is 1
        whenever anything is rejected. 1000 small networks keep the standard
        error of the mean well below the 0.02 margin.
        """
        proportions = []
        for seed in range(1000):
            stream = generate_network(constant_ground_truth(30, 10.0), seed=seed)
            affinity = fit_haar(stream, levels=4, rank=1, alpha=0.05, seed=seed).model.affinity
            rejections = affinity.n_rejections
            proportions.append(1.0 if rejections else 0.0)
        assert float(np.mean(proportions)) <= 0.07


def brute_force_step_up(p_values: np.ndarray, alpha: float) -> np.ndarray:
    """Reject the k smallest p-values for the largest k with ``p_(k) <= k alpha / m``."""
    m = p_values.size
    ordered = np.sort(p_values)
    for k in range(m, 0, -1):
        if ordered[k - 1] <= k * alpha / m:
            return p_values <= ordered[k - 1]
    return np.zeros(m, dtype=bool)


@pytest.mark.integration
class TestStepUpOracle:
    """Benjamini-Hochberg against a direct implementation."""

    def test_random_vectors(self):
        """Test exact agreement on 1000 random p-value vectors."""
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            size = int(rng.integers(1, 21))
            # Mix of signal-like and uniform p-values
            p_values = np.where(rng.random(size) < 0.3, rng.random(size) * 0.01, rng.random(size))
            alpha = float(rng.choice([0.01, 0.05, 0.1, 0.25]))
            rejected, _ = benjamini_hochberg(p_values, alpha)
            np.testing.assert_array_equal(rejected, brute_force_step_up(p_values, alpha))

    def test_monotone_in_alpha(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            p_values = rng.random(int(rng.integers(1, 21))) ** 2
            small, _ = benjamini_hochberg(p_values, 0.05)
            large, _ = benjamini_hochberg(p_values, 0.2)
            assert np.all(large[small])
