#!/usr/bin/env python3
"""
Tests for the closed-form Gamma integrals.

Tests:
- Alternating powers and the top power Gamma_m(s + 1)
- det(T)^(-s) derivatives: displayed closed forms and the product-rule route
- Monomial integrals by formula and via derivatives at T = 1
- Gamma(r, k, s): known values, palindrome, divisibility, nu-independence
- Symmetric square in matrix form and the invertibility verdict
"""

import math
import os
import sys
import unittest
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from exact import GammaExpr, PoleError, Poly, RationalFunction
from gamma_engine import (
    adjunct,
    check_alternating,
    check_det_derivative_closed_forms,
    check_monomial_routes,
    check_palindrome_and_divisibility,
    check_r0_forms,
    check_trace_route,
    det_derivative,
    gamma2,
    gamma_alternating,
    gamma_operator,
    gamma_r0_second_form,
    gamma_r0_trace_route,
    gamma_rk,
    gamma_rk_independence_check,
    integrate_entry_polynomial,
    invertibility_report,
    monomial_integral,
    monomial_integral_via_derivative,
    symmetric_matrix_form,
    symmetric_matrix_form_check,
)
from gl2_rep import HighestWeight, p_k_polynomial

S = Poly.variable()
HALF = Fraction(1, 2)


class TestAlternating(unittest.TestCase):

    def test_rank_two(self):
        self.assertEqual(gamma_alternating(2, 1), gamma2(S))
        self.assertEqual(gamma_alternating(2, 2), GammaExpr.build(2, 1, 1))

    def test_rank_three(self):
        self.assertEqual(gamma_alternating(3, 2), GammaExpr.build(3, S * (S - HALF)))

    def test_range(self):
        with self.assertRaises(ValueError):
            gamma_alternating(3, 4)
        with self.assertRaises(ValueError):
            gamma_alternating(2, 0)

    def test_check_suite(self):
        self.assertTrue(check_alternating().passed)


class TestDetDerivative(unittest.TestCase):

    def test_off_diagonal_first_order(self):
        d = det_derivative(0, 0, 1)
        self.assertEqual(len(d.terms), 1)
        term = d.terms[0]
        self.assertEqual((term.coeff, term.t11, term.t22, term.t12, term.det_shift), (1, 0, 0, 1, 1))
        self.assertEqual(term.poly, S)

    def test_diagonal_first_order(self):
        term = det_derivative(1, 0, 0).terms[0]
        self.assertEqual((term.coeff, term.t11, term.t22, term.t12, term.det_shift), (-1, 0, 1, 0, 1))

    def test_exact_evaluation(self):
        # d11 det^-s = -s T22 det^-(s+1); T = diag(2, 3), s = 1 gives -3/36
        value = det_derivative(1, 0, 0).evaluate(Fraction(2), Fraction(3), Fraction(0), Fraction(1))
        self.assertEqual(value, Fraction(-1, 12))

    def test_order_validation(self):
        with self.assertRaises(ValueError):
            det_derivative(0, 0, 0)
        with self.assertRaises(ValueError):
            det_derivative(-1, 1, 0)

    def test_closed_form_matches_product_rule(self):
        report = check_det_derivative_closed_forms(5)
        self.assertTrue(report.passed, [c.name for c in report.failures])


class TestMonomialIntegral(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(monomial_integral(0, 0, 1).is_zero())
        self.assertEqual(monomial_integral(1, 0, 0), gamma2(S))
        self.assertEqual(monomial_integral(1, 1, 0), gamma2(S * S))
        self.assertEqual(monomial_integral(0, 0, 2), gamma2(S * HALF))

    def test_derivative_route(self):
        self.assertEqual(monomial_integral_via_derivative(0, 0, 2), gamma2(S * HALF))
        self.assertEqual(monomial_integral_via_derivative(0, 0, 0), gamma2())
        self.assertTrue(check_monomial_routes(4).passed)

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            monomial_integral(0, -1, 0)

    def test_imaginary_part_vanishes(self):
        real, imag = integrate_entry_polynomial(p_k_polynomial(1, 0, 0))
        self.assertEqual(real, gamma2(S))
        self.assertTrue(imag.is_zero())


class TestGammaRK(unittest.TestCase):

    def test_symmetric_square(self):
        self.assertEqual(gamma_rk(2, 0), gamma2(S * (S + HALF)))
        self.assertEqual(gamma_rk(2, 1), gamma2(S * (S + Fraction(3, 2))))
        self.assertEqual(gamma_rk(2, 2), gamma_rk(2, 0))

    def test_middle_entries_stay_exact(self):
        # terms with j > mu must not enter the inner sum
        self.assertEqual(gamma_rk(2, 1).rat, RationalFunction(S * (S + Fraction(3, 2))))
        for r in range(2, 9):
            for k in range(1, r):
                e = gamma_rk(r, k)
                self.assertTrue(e.rat.is_polynomial(), (r, k))
                self.assertTrue(all(isinstance(c, Fraction) for c in e.rat.num.coefficients), (r, k))
                self.assertEqual(e, gamma_rk(r, r - k))

    def test_standard(self):
        self.assertEqual(gamma_rk(1, 0), gamma2(S))
        self.assertEqual(gamma_rk(0, 0), gamma2())

    def test_range(self):
        with self.assertRaises(ValueError):
            gamma_rk(2, 3)

    def test_palindrome_and_divisibility_to_12(self):
        self.assertTrue(check_palindrome_and_divisibility(12).passed)

    def test_r0_forms_to_40(self):
        self.assertTrue(check_r0_forms(40).passed)
        self.assertEqual(gamma_r0_second_form(2), gamma_rk(2, 0))

    def test_trace_route_to_12(self):
        self.assertTrue(check_trace_route(12).passed)
        self.assertEqual(gamma_r0_trace_route(1), gamma_rk(1, 0))


@pytest.mark.parametrize("r", range(6))
def test_nu_independence(r):
    for k in range(r + 1):
        report = gamma_rk_independence_check(r, k)
        assert report.passed, [c.name for c in report.failures]
        assert report.cases


def test_nu_independence_skips_vanishing_coordinate():
    names = [c.name for c in gamma_rk_independence_check(2, 1).cases]
    assert not any("nu=1" in name for name in names)
    assert any("nu=2" in name for name in names)


class TestGammaOperator(unittest.TestCase):

    def test_symmetric_square_operator(self):
        op = gamma_operator(HighestWeight(2, 0))
        self.assertEqual(list(op.diag), [gamma2(S * (S + HALF)), gamma2(S * (S + Fraction(3, 2))),
                                         gamma2(S * (S + HALF))])
        self.assertTrue(op.is_palindromic())

    def test_trivial_weight(self):
        self.assertEqual(list(gamma_operator(HighestWeight(0, 0)).diag), [gamma2()])

    def test_twist_shifts_argument(self):
        # st (x) det: both entries are Gamma(1, k, s + 1) = (s + 1) Gamma_2(s + 1)
        op = gamma_operator(HighestWeight(2, 1))
        expected = GammaExpr.build(2, S + 1, 1)
        self.assertEqual(list(op.diag), [expected, expected])
        # 3 Gamma_2(3) = 9 pi / 2
        self.assertEqual(op.diag[0].eval_numeric(2), pytest.approx(9 * math.pi / 2, rel=1e-12))

    def test_pure_det_twist(self):
        self.assertEqual(list(gamma_operator(HighestWeight(1, 1)).diag), [GammaExpr.build(2, 1, 1)])
        op = gamma_operator(HighestWeight(3, 1))
        self.assertEqual(list(op.diag), [gamma_rk(2, k).substitute(1) for k in range(3)])
        self.assertEqual(op.diag[1], GammaExpr.build(2, (S + 1) * (S + Fraction(5, 2)), 1))

    def test_rows(self):
        rows = gamma_operator(HighestWeight(2, 0)).rows()
        self.assertEqual([r["k"] for r in rows], [0, 1, 2])
        self.assertEqual(rows[0]["num"], ["0", "1/2", "1"])
        self.assertEqual(rows[0]["shift"], "0")


class TestSymmetricMatrixForm(unittest.TestCase):

    def test_adjunct(self):
        self.assertEqual(adjunct(((1, 2), (2, 3))), ((3, -2), (-2, 1)))

    def test_identity_matrix(self):
        form = symmetric_matrix_form(((1, 0), (0, 1)))
        self.assertEqual(form[0][0], gamma_rk(2, 1))
        self.assertTrue(form[0][1].is_zero())

    def test_check(self):
        report = symmetric_matrix_form_check()
        self.assertTrue(report.passed, [c.name for c in report.failures])


class TestInvertibility(unittest.TestCase):

    def test_invertible_at_three(self):
        verdict = invertibility_report(HighestWeight(2, 0), 3)
        self.assertTrue(verdict.invertible)
        self.assertEqual(verdict.polynomial_values, [Fraction(21, 2), Fraction(27, 2), Fraction(21, 2)])

    def test_all_vanish_at_zero(self):
        verdict = invertibility_report(HighestWeight(2, 0), 0)
        self.assertFalse(verdict.invertible)
        self.assertEqual(verdict.vanishing, [0, 1, 2])

    def test_corners_vanish_at_minus_half(self):
        verdict = invertibility_report(HighestWeight(2, 0), "-1/2")
        self.assertEqual(verdict.vanishing, [0, 2])

    def test_values_at_pole_raise(self):
        with self.assertRaises(PoleError):
            invertibility_report(HighestWeight(2, 0), 0, with_values=True)

    def test_values_at_regular_point(self):
        verdict = invertibility_report(HighestWeight(1, 0), 3, with_values=True)
        # 3 Gamma_2(3) = 3 * (3/2) Gamma_2(1)
        self.assertEqual(verdict.values, ["9/2*Gamma_2(1)", "9/2*Gamma_2(1)"])
        self.assertEqual(verdict.to_dict()["s0"], "3")


if __name__ == "__main__":
    unittest.main()
