"""Unit tests for the Haar family and pointwise basis evaluation."""

from __future__ import annotations

import unittest

import numpy as np

from src.algorithms.basis.evaluation import (
    evaluate,
    evaluate_matrix,
    evaluate_squared,
    evaluate_squared_matrix,
)
from src.algorithms.basis.haar import dyadic_cell, haar_basis, haar_index, haar_position
from src.errors import DomainError, ParameterError
from src.models.basis import BasisKind
from src.utils.quadrature import midpoint_grid


class TestHaarLayout(unittest.TestCase):
    """Index layout and construction of the Haar family."""

    def test_size_is_two_to_the_levels(self) -> None:
        for levels in range(6):
            self.assertEqual(haar_basis(levels).size, 2**levels)

    def test_scaling_function_comes_first(self) -> None:
        basis = haar_basis(3)
        self.assertIs(basis[0].kind, BasisKind.HAAR_SCALING)
        self.assertTrue(all(f.kind is BasisKind.HAAR_DETAIL for f in basis.functions[1:]))

    def test_index_and_position_are_inverse(self) -> None:
        for level in range(5):
            for location in range(2**level):
                index = haar_index(level, location)
                self.assertEqual(haar_position(index), (level, location))

    def test_detail_positions_match_index(self) -> None:
        basis = haar_basis(4)
        function = basis[haar_index(2, 3)]
        self.assertEqual((function.scale, function.location), (2, 3))
        self.assertEqual(function.support, (0.75, 1.0))

    def test_level_slice(self) -> None:
        basis = haar_basis(4)
        self.assertEqual(basis.level_slice(0), slice(1, 2))
        self.assertEqual(basis.level_slice(3), slice(8, 16))
        with self.assertRaises(ParameterError):
            basis.level_slice(4)

    def test_zero_levels_is_scaling_only(self) -> None:
        basis = haar_basis(0)
        self.assertEqual(basis.size, 1)
        self.assertTrue(basis.is_haar)

    def test_negative_levels_rejected(self) -> None:
        with self.assertRaises(ParameterError):
            haar_basis(-1)

    def test_scaling_index_has_no_position(self) -> None:
        with self.assertRaises(ParameterError):
            haar_position(0)

    def test_descriptor_hash_depends_on_levels(self) -> None:
        self.assertEqual(haar_basis(3).descriptor_hash, haar_basis(3).descriptor_hash)
        self.assertNotEqual(haar_basis(3).descriptor_hash, haar_basis(4).descriptor_hash)


class TestDyadicCell(unittest.TestCase):
    """Cell lookup on the dyadic grid."""

    def test_left_closed_cells(self) -> None:
        cells = dyadic_cell(np.array([0.0, 0.249, 0.25, 0.5, 0.99]), 2)
        np.testing.assert_array_equal(cells, [0, 0, 1, 2, 3])

    def test_one_belongs_to_last_cell(self) -> None:
        self.assertEqual(int(dyadic_cell(1.0, 3)), 7)


class TestEvaluation(unittest.TestCase):
    """Pointwise values of Haar functions."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.basis = haar_basis(3)

    def test_detail_sign_and_amplitude(self) -> None:
        psi = self.basis[haar_index(1, 0)]
        values = evaluate(psi, np.array([0.1, 0.3, 0.6]))
        np.testing.assert_allclose(values, [np.sqrt(2), -np.sqrt(2), 0.0])

    def test_breakpoint_belongs_to_right_half(self) -> None:
        psi = self.basis[haar_index(0, 0)]
        self.assertEqual(float(evaluate(psi, 0.5)), -1.0)

    def test_endpoint_one(self) -> None:
        psi = self.basis[haar_index(2, 3)]
        self.assertEqual(float(evaluate(psi, 1.0)), -2.0)

    def test_squared_matches_square_of_value(self) -> None:
        t = np.linspace(0.0, 1.0, 101)
        for function in self.basis.functions:
            value = evaluate(function, t)
            np.testing.assert_allclose(evaluate_squared(function, t), value * value, rtol=1e-14)

    def test_squared_is_exact_power_of_two(self) -> None:
        """Test the square of a level-j detail is exactly 2^j on its support, odd j included."""
        basis = haar_basis(6)
        t = np.linspace(0.0, 1.0, 257)
        squares = evaluate_squared_matrix(basis, t)
        for function in basis.functions[1:]:
            with self.subTest(level=function.scale, location=function.location):
                expected = float(2**function.scale)
                self.assertEqual(function.squared_amplitude, expected)
                support = squares[function.id] != 0.0
                self.assertTrue(support.any())
                np.testing.assert_array_equal(squares[function.id][support], expected)
                np.testing.assert_array_equal(evaluate_squared(function, t), squares[function.id])

    def test_matrix_matches_per_function(self) -> None:
        t = np.linspace(0.0, 1.0, 37)
        matrix = evaluate_matrix(self.basis, t)
        for function in self.basis.functions:
            np.testing.assert_array_equal(matrix[function.id], evaluate(function, t))
        np.testing.assert_allclose(evaluate_squared_matrix(self.basis, t), matrix * matrix, rtol=1e-14)

    def test_orthonormal_under_midpoint_rule(self) -> None:
        samples = evaluate_matrix(self.basis, midpoint_grid(64))
        gram = samples @ samples.T / 64
        np.testing.assert_allclose(gram, np.eye(self.basis.size), atol=1e-12)

    def test_outside_unit_interval_rejected(self) -> None:
        with self.assertRaises(DomainError):
            evaluate(self.basis[1], np.array([0.5, 1.5]))
        with self.assertRaises(DomainError):
            evaluate_matrix(self.basis, np.array([-0.1]))


if __name__ == "__main__":
    unittest.main()
