"""Unit tests for affinity compression, z-scores and thresholding."""

from __future__ import annotations

import unittest

import numpy as np

from src.algorithms.affinity.coefficients import AffinityCoefficients, affinity_coeffs, z_scores
from src.algorithms.affinity.scope import scope_scaling_exclusion
from src.algorithms.affinity.threshold import estimate_affinity, threshold_affinity
from src.algorithms.basis.haar import haar_basis
from src.algorithms.basis.orthonormalize import orthonormalize
from src.algorithms.coefficients.projection import project
from src.errors import ShapeError
from src.models.event_stream import EventStream
from src.models.subspace_estimate import SubspaceEstimate


def _stream() -> EventStream:
    events = [(0, 1, 0.1), (0, 1, 0.2), (1, 2, 0.7), (2, 0, 0.9), (1, 0, 0.3)]
    return EventStream.from_events(events, n_nodes=3, horizon=1.0)


def _subspace(n_nodes: int, rank: int, seed: int = 0) -> SubspaceEstimate:
    u = np.linalg.qr(np.random.default_rng(seed).normal(size=(n_nodes, rank)))[0]
    return SubspaceEstimate(u_hat=u, singular_values=np.ones(rank))


class TestAffinityCoefficients(unittest.TestCase):
    """Compression onto the subspace."""

    def test_matches_dense_products(self) -> None:
        coeffs = project(_stream(), haar_basis(2))
        subspace = _subspace(3, 2)
        u = subspace.u_hat
        result = affinity_coeffs(coeffs, subspace)
        for b in range(coeffs.n_basis):
            y = coeffs.matrix(b).toarray()
            y_sq = coeffs.matrix(b, squared=True).toarray()
            np.testing.assert_allclose(result.s_hat[b], u.T @ y @ u, atol=1e-12)
            np.testing.assert_allclose(result.var_hat[b], (u * u).T @ y_sq @ (u * u), atol=1e-12)

    def test_node_count_must_match(self) -> None:
        coeffs = project(_stream(), haar_basis(1))
        with self.assertRaises(ShapeError):
            affinity_coeffs(coeffs, _subspace(4, 1))

    def test_zero_variance_is_untestable(self) -> None:
        coefficients = AffinityCoefficients(
            s_hat=np.array([[[2.0]], [[0.0]]]), var_hat=np.array([[[4.0]], [[0.0]]])
        )
        scores = z_scores(coefficients)
        np.testing.assert_array_equal(scores.z[:, 0, 0], [1.0, 0.0])
        np.testing.assert_array_equal(scores.testable[:, 0, 0], [True, False])


class TestScope(unittest.TestCase):
    """Which functions are tested."""

    def test_haar_scaling_exempt(self) -> None:
        np.testing.assert_array_equal(scope_scaling_exclusion(haar_basis(2)), [False, True, True, True])

    def test_exemption_can_be_disabled(self) -> None:
        self.assertTrue(scope_scaling_exclusion(haar_basis(2), exempt_scaling=False).all())

    def test_generic_basis_fully_tested(self) -> None:
        basis = orthonormalize([lambda t: np.ones_like(t), lambda t: t], panels=256)
        self.assertTrue(scope_scaling_exclusion(basis).all())


class TestThreshold(unittest.TestCase):
    """End-to-end affinity estimation."""

    def test_thresholded_coefficients_follow_mask(self) -> None:
        coefficients = AffinityCoefficients(
            s_hat=np.array([[[5.0]], [[40.0]], [[0.5]]]),
            var_hat=np.array([[[5.0]], [[4.0]], [[4.0]]]),
        )
        result = threshold_affinity(coefficients, np.array([False, True, True]), alpha=0.05)
        np.testing.assert_array_equal(result.s_thresh[:, 0, 0], [5.0, 40.0, 0.0])
        self.assertEqual(result.n_tests, 2)
        self.assertEqual(result.n_rejections, 1)

    def test_alpha_zero_keeps_only_scaling(self) -> None:
        coeffs = project(_stream(), haar_basis(2))
        result = estimate_affinity(coeffs, _subspace(3, 1), haar_basis(2), alpha=0.0)
        self.assertTrue(result.mask[0].all())
        self.assertFalse(result.mask[1:].any())
        np.testing.assert_array_equal(result.s_thresh[1:], 0.0)

    def test_empty_stream_gives_zero_affinity(self) -> None:
        basis = haar_basis(2)
        coeffs = project(EventStream.empty(3), basis)
        result = estimate_affinity(coeffs, _subspace(3, 1), basis, alpha=0.05)
        np.testing.assert_array_equal(result.s_hat, 0.0)
        self.assertEqual(result.n_tests, 0)
        self.assertFalse(result.testable.any())


if __name__ == "__main__":
    unittest.main()
