#!/usr/bin/env python3
"""
Tests for the numeric oracle.

Tests:
- QuadratureSpec parsing and overrides
- Calibrated quadrature against Gamma_2 and the rank-two Gamma matrices, twisted weights included
- The theta trapezoid is exact once it has more nodes than the trig degree
- Ordered-region det^k integral
- Finite-difference checks of det derivatives and the Maass shift
- Convergence warnings and argument validation
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

from config_loader import ConfigLoader
from exact import ConvergenceWarning, DomainError
from gl2_rep import HighestWeight
from numeric_oracle import (
    TWISTED_WEIGHTS,
    QuadratureSpec,
    _theta_average,
    check_weight,
    compare_all,
    det_derivative_fd_check,
    det_derivative_sweep,
    integrate_gamma_numeric,
    is_exactness_case,
    maass_fd_check,
    off_diagonal_ratio,
    random_positive_point,
    weyl_detk_check,
)
from reporting import OracleReport


class TestQuadratureSpec(unittest.TestCase):

    def test_defaults(self):
        spec = QuadratureSpec()
        self.assertEqual(spec.laguerre_order, 80)
        self.assertEqual(spec.theta_points, 64)
        self.assertEqual(spec.s_values, (Fraction(5, 2), Fraction(7, 2), 3.1))

    def test_from_dict(self):
        spec = QuadratureSpec.from_dict({"laguerre_order": 40, "s_values": ["9/2", 2.75], "comment": "x"})
        self.assertEqual(spec.laguerre_order, 40)
        self.assertEqual(spec.s_values, (Fraction(9, 2), 2.75))
        self.assertEqual(spec.calibration_s, Fraction(5, 2))

    def test_with_overrides_ignores_none(self):
        spec = QuadratureSpec().with_overrides(laguerre_order=None, tol=1e-3)
        self.assertEqual(spec.laguerre_order, 80)
        self.assertEqual(spec.tol, 1e-3)

    def test_to_dict(self):
        data = QuadratureSpec().to_dict()
        self.assertEqual(data["s_values"], ["5/2", "7/2", 3.1])
        self.assertEqual(data["calibration_s"], "5/2")

    def test_rejects_low_order(self):
        with self.assertRaises(ValueError):
            QuadratureSpec(laguerre_order=1)


class TestExactnessCase(unittest.TestCase):

    def test_cases(self):
        self.assertTrue(is_exactness_case(Fraction(5, 2)))
        self.assertTrue(is_exactness_case(Fraction(3, 2)))
        self.assertTrue(is_exactness_case(Fraction(1, 2), l2=1))
        self.assertFalse(is_exactness_case(Fraction(1, 2)))
        self.assertFalse(is_exactness_case(Fraction(3)))
        self.assertFalse(is_exactness_case(3.1))


class TestQuadrature(unittest.TestCase):

    spec = QuadratureSpec()

    def test_scalar_gamma2(self):
        # Gamma_2(2) = sqrt(pi) Gamma(2) Gamma(3/2) = pi/2
        value = integrate_gamma_numeric(HighestWeight(0, 0), Fraction(2), self.spec)[0, 0]
        self.assertAlmostEqual(value, math.pi / 2, delta=1e-10)

    def test_divergent_exponent(self):
        with self.assertRaises(DomainError):
            integrate_gamma_numeric(HighestWeight(0, 0), Fraction(1, 2), self.spec)

    def test_weight_two_is_diagonal(self):
        report = OracleReport("r=2")
        check_weight(HighestWeight(2, 0), Fraction(5, 2), self.spec, report)
        self.assertTrue(report.passed, [c.to_dict() for c in report.failures])
        self.assertTrue(all(c.tolerance == self.spec.exact_tol for c in report.cases if "k=" in c.name))

    def test_twisted_weight(self):
        report = OracleReport("l=(1,1)")
        check_weight(HighestWeight(1, 1), 3.1, self.spec, report)
        self.assertTrue(report.passed, [c.to_dict() for c in report.failures])

    def test_scaled_rate(self):
        report = OracleReport("rate")
        check_weight(HighestWeight(1, 0), Fraction(7, 2), self.spec, report, rate=4 * np.pi)
        self.assertTrue(report.passed, [c.to_dict() for c in report.failures])

    def test_monomial_basis_is_not_diagonal(self):
        matrix = integrate_gamma_numeric(HighestWeight(2, 0), Fraction(5, 2), self.spec)
        self.assertGreater(off_diagonal_ratio(matrix), 1e-3)

    def test_doubling_order_is_stable(self):
        coarse = integrate_gamma_numeric(HighestWeight(2, 0), Fraction(5, 2), QuadratureSpec(laguerre_order=40))
        fine = integrate_gamma_numeric(HighestWeight(2, 0), Fraction(5, 2), QuadratureSpec(laguerre_order=80))
        self.assertLess(np.max(np.abs(fine - coarse)) / np.max(np.abs(fine)), 1e-12)

    def test_theta_rule_is_exact_for_trig_polynomials(self):
        # entries are trig polynomials of degree r in 2 theta, so any M > r nodes are exact
        rng = np.random.default_rng(3)
        for r in range(5):
            radial = rng.uniform(0.5, 2.0, r + 1)
            fine = _theta_average(r, radial, 64)
            scale = np.max(np.abs(fine))
            for points in (r + 1, 32):
                coarse = _theta_average(r, radial, points)
                self.assertLess(np.max(np.abs(fine - coarse)) / scale, 1e-13, (r, points))

    def test_low_order_warns(self):
        spec = QuadratureSpec(laguerre_order=4)
        with pytest.warns(ConvergenceWarning):
            integrate_gamma_numeric(HighestWeight(4, 0), 3.1, spec)


class TestWeylIntegral(unittest.TestCase):

    def test_k2(self):
        report = weyl_detk_check(2, QuadratureSpec())
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.cases[0].closed_form, -0.5, places=14)

    def test_k_too_small(self):
        with self.assertRaises(ValueError):
            weyl_detk_check(1, QuadratureSpec())


class TestDetDerivativeFiniteDifferences(unittest.TestCase):

    def test_single_order(self):
        t = [[Fraction(2), Fraction(1, 2)], [Fraction(1, 2), Fraction(1)]]
        report = det_derivative_fd_check(2, 1, 0, t, Fraction(3, 2))
        self.assertTrue(report.passed, [c.to_dict() for c in report.failures])
        self.assertIn("T=[2 1/2; 1/2 1]", report.cases[0].name)

    def test_off_diagonal_order(self):
        t = [[Fraction(3), Fraction(-1, 4)], [Fraction(-1, 4), Fraction(2)]]
        self.assertTrue(det_derivative_fd_check(0, 0, 3, t, Fraction(5, 4)).passed)

    def test_random_points_are_positive(self):
        rng = random.Random(7)
        for _ in range(20):
            t, s = random_positive_point(rng)
            self.assertGreater(t[0][0] * t[1][1] - t[0][1] ** 2, 0)
            self.assertNotEqual(t[0][1], 0)
            self.assertGreater(s, Fraction(1, 2))

    def test_sweep(self):
        report = det_derivative_sweep(seed=3, points=2, total_max=3)
        self.assertTrue(report.passed, [c.to_dict() for c in report.failures])
        # orders with 1 <= n1 + n2 + n3 <= 3, per point
        self.assertEqual(len(report.cases), 2 * 19)


def _maass_cases():
    for index, (t, z0) in enumerate(ConfigLoader().maass_samples()):
        for k in (1, 2, 3):
            yield pytest.param(k, t, z0, id=f"sample{index}-k{k}")


@pytest.mark.parametrize("k,t,z0", list(_maass_cases()))
def test_maass_shift(k, t, z0):
    report = maass_fd_check(k, t, z0)
    assert report.passed, [c.to_dict() for c in report.failures]
    assert len(report.cases) == 2


def test_maass_step_out_of_range():
    with pytest.raises(ValueError):
        maass_fd_check(1, np.eye(2), 1j * np.eye(2), h=1e-2)


def test_maass_requires_positive_imaginary_part():
    with pytest.raises(ValueError):
        maass_fd_check(1, np.eye(2), 1j * np.diag([1.0, -1.0]))


@pytest.mark.parametrize("l", [HighestWeight(2, 1), HighestWeight(3, 1), HighestWeight(2, 2)], ids=str)
@pytest.mark.parametrize("s0", [Fraction(5, 2), 3.1], ids=["5/2", "3.1"])
def test_twisted_weights_match_closed_form(l, s0):
    report = OracleReport(f"l={l}")
    check_weight(l, s0, QuadratureSpec(), report)
    assert report.passed, [c.to_dict() for c in report.failures]
    # off-diagonal mass, every k, trace
    assert len(report.cases) == l.r + 3


def test_compare_all_defaults():
    report = compare_all(QuadratureSpec(), r_max=3)
    assert report.passed, [c.to_dict() for c in report.failures]
    assert report.warnings == []
    names = [c.name for c in report.cases]
    assert "calibration Gamma_2(5/2)" in names
    for l in TWISTED_WEIGHTS:
        assert any(name.startswith(f"l={l} s0=3.1") for name in names), l


if __name__ == "__main__":
    unittest.main()
