"""Unit tests for the concatenated matrix, truncated SVD and Procrustes error."""

from __future__ import annotations

import unittest

import numpy as np
from scipy import sparse
from scipy.stats import ortho_group

from src.algorithms.basis.haar import haar_basis
from src.algorithms.coefficients.projection import project
from src.algorithms.subspace.concatenation import build_x
from src.algorithms.subspace.procrustes import projector_distance, subspace_error
from src.algorithms.subspace.truncated_svd import scree, truncated_svd
from src.errors import RankError, ShapeError
from src.models.event_stream import EventStream


class TestBuildX(unittest.TestCase):
    """Layout of the concatenated matrix."""

    def test_block_b_holds_transposed_coefficients(self) -> None:
        stream = EventStream.from_events(
            [(0, 1, 0.1), (0, 1, 0.7), (2, 0, 0.4)], n_nodes=3, horizon=1.0
        )
        coeffs = project(stream, haar_basis(1))
        x = build_x(coeffs).toarray()
        self.assertEqual(x.shape, (3, 6))
        for b in range(2):
            np.testing.assert_array_equal(x[:, b * 3 : (b + 1) * 3], coeffs.matrix(b).toarray().T)


class TestTruncatedSvd(unittest.TestCase):
    """Subspace estimation."""

    def test_rank_one_matrix(self) -> None:
        a = np.array([1.0, -3.0, 2.0])
        b = np.arange(1.0, 7.0)
        estimate = truncated_svd(np.outer(a, b), rank=1)
        expected = -a / np.linalg.norm(a)  # largest-magnitude entry made positive
        np.testing.assert_allclose(estimate.u_hat[:, 0], expected, atol=1e-12)
        self.assertAlmostEqual(
            estimate.singular_values[0], np.linalg.norm(a) * np.linalg.norm(b), places=10
        )
        self.assertFalse(estimate.deficient)

    def test_rank_beyond_nonzero_spectrum_is_deficient(self) -> None:
        estimate = truncated_svd(np.outer([1.0, 2.0, 3.0], [1.0, 1.0]), rank=2)
        self.assertTrue(estimate.deficient)
        self.assertEqual(estimate.singular_values[1], 0.0)
        np.testing.assert_allclose(estimate.u_hat.T @ estimate.u_hat, np.eye(2), atol=1e-10)

    def test_zero_matrix_gives_coordinate_axes(self) -> None:
        estimate = truncated_svd(sparse.csr_matrix((4, 8)), rank=2)
        np.testing.assert_array_equal(estimate.u_hat, np.eye(4)[:, :2])
        self.assertTrue(estimate.deficient)

    def test_invalid_rank(self) -> None:
        with self.assertRaises(RankError):
            truncated_svd(np.eye(3), rank=4)
        with self.assertRaises(RankError):
            truncated_svd(np.eye(3), rank=0)

    def test_sparse_solver_matches_dense(self) -> None:
        x = sparse.random(40, 400, density=0.1, random_state=3, format="csr")
        dense = truncated_svd(x, rank=3, scree_count=5)
        iterative = truncated_svd(x, rank=3, scree_count=5, dense_threshold=0, seed=11)
        np.testing.assert_allclose(iterative.singular_values, dense.singular_values, rtol=1e-6)
        self.assertLess(projector_distance(iterative.u_hat, dense.u_hat), 1e-6)

    def test_deterministic(self) -> None:
        x = sparse.random(40, 400, density=0.1, random_state=5, format="csr")
        first = truncated_svd(x, rank=2, dense_threshold=0, seed=1)
        second = truncated_svd(x, rank=2, dense_threshold=0, seed=1)
        np.testing.assert_array_equal(first.u_hat, second.u_hat)

    def test_scree(self) -> None:
        estimate = truncated_svd(np.diag([3.0, 2.0, 1.0]), rank=1, scree_count=3)
        points = scree(estimate)
        self.assertEqual([index for index, _ in points], [1, 2, 3])
        np.testing.assert_allclose([sigma for _, sigma in points], [3.0, 2.0, 1.0])


class TestProcrustes(unittest.TestCase):
    """Rotation-invariant subspace error."""

    def test_rotated_basis_has_zero_error(self) -> None:
        u = np.linalg.qr(np.random.default_rng(0).normal(size=(10, 3)))[0]
        q = ortho_group.rvs(3, random_state=1)
        self.assertLess(subspace_error(u @ q, u), 1e-12)
        self.assertLess(projector_distance(u @ q, u), 1e-12)

    def test_orthogonal_subspaces(self) -> None:
        eye = np.eye(4)
        self.assertAlmostEqual(subspace_error(eye[:, :1], eye[:, 1:2]), np.sqrt(2.0))

    def test_shape_mismatch(self) -> None:
        with self.assertRaises(ShapeError):
            subspace_error(np.eye(4)[:, :2], np.eye(4)[:, :1])


if __name__ == "__main__":
    unittest.main()
