#!/usr/bin/env python3
"""
Tests for the GL(2) symmetric power representations.

Tests:
- Highest weights: dominance, twists, Harish-Chandra parameter
- rho_r in the monomial basis is a homomorphism and rho_1(g) = g
- The V_k basis diagonalizes rotations with eigenvalue exp(i theta (r - 2k))
- P_k(nu, Y) agrees between its expanded and direct forms and with rho_r(Y) V_k
"""

import math
import os
import random
import sys
import unittest
from fractions import Fraction

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from exact import I, GaussianRational
from gl2_rep import (
    Basis,
    EntryPolynomial,
    HighestWeight,
    RepMatrix,
    harish_chandra_parameter,
    p_k_polynomial,
    p_k_value,
    rho_matrix,
    rotation,
    so2_eigenvalue,
    to_weight_basis,
    weight_basis,
)

G = [[1, 2], [3, 4]]
H = [[0, 1], [-1, 5]]
QUARTER_TURN = [[0, -1], [1, 0]]


class TestHighestWeight(unittest.TestCase):

    def test_dominance_required(self):
        with self.assertRaises(ValueError):
            HighestWeight(1, 2)
        with self.assertRaises(ValueError):
            HighestWeight(Fraction(1, 2), 0)

    def test_kappa_twist(self):
        l = HighestWeight.from_kappa_twist(3)
        self.assertEqual(l, HighestWeight(4, 3))
        self.assertEqual(l.r, 1)
        self.assertEqual(l.kappa, 3)
        self.assertEqual(str(l), "(4,3)")

    def test_harish_chandra_parameter(self):
        self.assertEqual(harish_chandra_parameter(HighestWeight(4, 3)), (3, 1))
        self.assertEqual(HighestWeight(2, 0).harish_chandra_parameter(), (1, -2))


class TestRhoMatrix(unittest.TestCase):

    def test_degree_one_is_g(self):
        self.assertEqual(rho_matrix(1, G).entries, ((1, 2), (3, 4)))

    def test_degree_zero_is_trivial(self):
        self.assertEqual(rho_matrix(0, G).entries, ((1,),))

    def test_diagonal_matrix(self):
        m = rho_matrix(2, [[2, 0], [0, 3]])
        self.assertEqual([m[i, i] for i in range(3)], [4, 6, 9])
        self.assertEqual(m[0, 1], 0)

    def test_homomorphism(self):
        gh = [[-2, 11], [-4, 23]]
        for r in range(5):
            self.assertEqual(rho_matrix(r, gh), rho_matrix(r, G) @ rho_matrix(r, H))

    def test_identity(self):
        self.assertEqual(rho_matrix(3, [[1, 0], [0, 1]]), RepMatrix.identity(4))

    def test_dimension_mismatch(self):
        with self.assertRaises(ValueError):
            rho_matrix(1, G) @ rho_matrix(2, G)

    def test_negative_degree(self):
        with self.assertRaises(ValueError):
            rho_matrix(-1, G)


class TestWeightBasis(unittest.TestCase):

    def test_quarter_turn_is_diagonal_exactly(self):
        for r in range(6):
            m = to_weight_basis(rho_matrix(r, QUARTER_TURN))
            self.assertIs(m.basis, Basis.WEIGHT)
            for i in range(r + 1):
                for j in range(r + 1):
                    expected = I ** (r - 2 * i) if i == j else 0
                    self.assertEqual(m[i, j], expected, f"r={r} ({i},{j})")

    def test_inverse(self):
        basis = weight_basis(3)
        self.assertEqual(basis.inverse() @ basis.matrix(), RepMatrix.identity(4, Basis.WEIGHT))

    def test_columns(self):
        basis = weight_basis(1)
        # V_0 = z1 - i z2, V_1 = z1 + i z2
        self.assertEqual(basis.columns[0], (GaussianRational(1), -I))
        self.assertEqual(basis.columns[1], (GaussianRational(1), I))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_rotation_eigenvalues_numeric(r):
    theta = 0.3
    w = weight_basis(r).to_numpy()
    rho = rho_matrix(r, rotation(theta)).to_numpy()
    conjugated = np.linalg.solve(w, rho @ w)
    expected = np.diag([so2_eigenvalue(r, k, theta) for k in range(r + 1)])
    assert np.allclose(conjugated, expected, atol=1e-12)


def test_so2_eigenvalue_sign():
    assert so2_eigenvalue(1, 0, math.pi / 2) == pytest.approx(1j)
    assert so2_eigenvalue(2, 1, 1.0) == pytest.approx(1.0)


def test_entry_polynomial_square():
    p = EntryPolynomial.linear(1, 1, 0) ** 2
    assert p.items() == [((0, 2, 0), 1), ((1, 1, 0), 2), ((2, 0, 0), 1)]


@pytest.mark.parametrize("r,k,nu", [(1, 0, 0), (2, 1, 1), (3, 1, 2), (4, 2, 2)])
def test_p_k_expanded_matches_direct(r, k, nu):
    y = [[Fraction(2), Fraction(1, 2)], [Fraction(1, 2), Fraction(3)]]
    expanded = p_k_polynomial(r, k, nu).evaluate(y[0][0], y[1][1], y[0][1])
    assert expanded == p_k_value(r, k, nu, y)


def test_p_k_value_requires_symmetry():
    with pytest.raises(ValueError):
        p_k_value(1, 0, 0, [[1, 2], [3, 4]])


def _random_rational_matrix(rng, symmetric=False):
    def q():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    a, b, d = q(), q(), q()
    c = b if symmetric else q()
    return [[a, b], [c, d]]


def test_homomorphism_on_random_matrices():
    rng = random.Random(20)
    for _ in range(20):
        g, h = _random_rational_matrix(rng), _random_rational_matrix(rng)
        gh = [[sum(g[i][l] * h[l][j] for l in range(2)) for j in range(2)] for i in range(2)]
        for r in range(7):
            assert rho_matrix(r, gh) == rho_matrix(r, g) @ rho_matrix(r, h), (g, h, r)


def test_p_k_value_is_rho_of_y_on_weight_vector():
    # monomial coordinate nu of rho_r(Y) V_k equals i^nu P_k(nu, Y)
    rng = random.Random(5)
    for _ in range(6):
        y = _random_rational_matrix(rng, symmetric=True)
        for r in range(5):
            image = rho_matrix(r, y) @ weight_basis(r).matrix()
            for k in range(r + 1):
                for nu in range(r + 1):
                    assert image[nu, k] == I ** nu * p_k_value(r, k, nu, y), (y, r, k, nu)


def test_p_k_value_at_identity_is_weight_coordinate():
    for r in range(5):
        basis = weight_basis(r)
        for k in range(r + 1):
            for nu in range(r + 1):
                assert I ** nu * p_k_value(r, k, nu, [[1, 0], [0, 1]]) == basis.columns[k][nu]


if __name__ == "__main__":
    unittest.main()
