"""The subspace estimate approaches the true community subspace as N grows."""

from __future__ import annotations

# IMPORTANT: Set environment variables BEFORE importing any src modules
from tests.integration.common_setup import setup_test_environment

setup_test_environment()

import numpy as np
import pytest

from src.algorithms.basis.haar import haar_basis
from src.algorithms.coefficients.projection import project
from src.algorithms.subspace.concatenation import build_x
from src.algorithms.subspace.procrustes import subspace_error
from src.algorithms.subspace.truncated_svd import truncated_svd
from src.data_sources.synthetic.generators import dsbm_ground_truth
from src.data_sources.synthetic.network import generate_network

NODE_COUNTS = (50, 100, 200, 400, 800)
SEEDS = range(10)


def median_error(n_nodes: int, levels: int = 6) -> float:
    truth = dsbm_ground_truth(n_nodes)
    basis = haar_basis(levels)
    errors = []
    for seed in SEEDS:
        coeffs = project(generate_network(truth, seed=seed), basis)
        estimate = truncated_svd(build_x(coeffs), 2, seed=seed)
        errors.append(subspace_error(estimate.u_hat, truth.u_true))
    return float(np.median(errors))


@pytest.mark.integration
@pytest.mark.slow
class TestSubspaceConsistency:
    """Procrustes error against the DSBM indicator subspace."""

    def test_median_error_decreases_with_network_size(self):
        """Test the median error over 10 seeds strictly decreases along N."""
        medians = [median_error(n) for n in NODE_COUNTS]
        assert all(later < earlier for earlier, later in zip(medians, medians[1:], strict=False)), medians
