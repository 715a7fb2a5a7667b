#!/usr/bin/env python3
"""
Sturm operator coefficients for the weight tau (x) det^2 with tau = st (x) det^(k+1/2).

Applying the Maass shift operator to e^(2 pi i tr(TZ)) gives four terms
(maass_terms). Integrating each against det(Y)^s e^(-4 pi tr(TY)) gives the
Sturm terms t1..t4; their combination b(T, s) has the limit

    lim_{s->0} (s^2 - s/2) / (s + k - 1)

which is -1/2 for k = 1 and 0 for every k >= 2. The surviving k = 1 value is
the phantom term. T-dependence is factored out throughout: every value here is
the coefficient of det(T)^(-3/2) a(T).

Usage:
    from sturm_phantom import phantom_limit
    str(phantom_limit(1).limit)    # "-8*pi^2"
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from exact import (
    DivergesError,
    DomainError,
    ExactValue,
    GammaExpr,
    PoleError,
    Poly,
    RationalFunction,
)
from gamma_engine import gamma_alternating, integrate_entry_polynomial
from gl2_rep import EntryPolynomial, HighestWeight
from reporting import CheckReport

logger = logging.getLogger(__name__)

S = Poly.variable()
HALF = Fraction(1, 2)


class TermShape(Enum):
    DET_INV = "det(Y)^-1*1"
    TRACE_DET_INV = "tr(TY)*det(Y)^-1*1"
    CONSTANT = "det(T)*1"
    TY_INVERSE = "det(T)*(TY)^-1"


# Integrand against det(Y)^(s + sigma0) e^(-4 pi tr Y) once T is factored out,
# with sigma0 = k + offset; the base factor is det(Y)^(k+1/2) * Y.
_STURM_INTEGRAND = {
    TermShape.DET_INV: ("Y", -HALF),
    TermShape.TRACE_DET_INV: ("Y*trY", -HALF),
    TermShape.CONSTANT: ("Y", HALF),
    TermShape.TY_INVERSE: ("1", HALF),
}


@dataclass(frozen=True)
class MaassTerm:
    shape: TermShape
    coefficient: Fraction
    four_pi_power: int

    @property
    def value(self) -> ExactValue:
        return ExactValue.make(self.coefficient, 0, 0, self.four_pi_power)

    def evaluate(self, t: np.ndarray, y: np.ndarray) -> np.ndarray:
        c = float(self.coefficient) * (4 * np.pi) ** self.four_pi_power
        eye = np.eye(2)
        if self.shape is TermShape.DET_INV:
            return c / np.linalg.det(y) * eye
        if self.shape is TermShape.TRACE_DET_INV:
            return c * np.trace(t @ y) / np.linalg.det(y) * eye
        if self.shape is TermShape.CONSTANT:
            return c * np.linalg.det(t) * eye
        return c * np.linalg.det(t) * np.linalg.inv(t @ y)


@dataclass(frozen=True)
class MaassTermSet:
    k: int
    terms: Tuple[MaassTerm, ...]

    def evaluate(self, t, z) -> np.ndarray:
        """Closed form of the Maass shift of e^(2 pi i tr(TZ)) at Z."""
        t = np.asarray(t, dtype=float)
        z = np.asarray(z, dtype=complex)
        y = z.imag
        phase = np.exp(2j * np.pi * np.trace(t @ z))
        total = np.zeros((2, 2), dtype=complex)
        for term in self.terms:
            total = total + term.evaluate(t, y)
        return phase * total

    def scalar_part(self, t, z) -> complex:
        """Coefficient of the identity matrix: the first three terms."""
        t = np.asarray(t, dtype=float)
        z = np.asarray(z, dtype=complex)
        phase = np.exp(2j * np.pi * np.trace(t @ z))
        return phase * sum(term.evaluate(t, z.imag)[0, 0] for term in self.terms[:3])

    def rows(self) -> List[Dict]:
        return [{"k": self.k, "shape": term.shape.value, "coefficient": str(term.value)} for term in self.terms]


def maass_terms(k: int) -> MaassTermSet:
    if k < 1:
        raise ValueError(f"k must be a positive integer; got: {k}")
    kk = Fraction(k)
    return MaassTermSet(k, (
        MaassTerm(TermShape.DET_INV, (kk + 1) * (kk - HALF), 0),
        MaassTerm(TermShape.TRACE_DET_INV, -(kk - HALF), 1),
        MaassTerm(TermShape.CONSTANT, Fraction(1), 2),
        MaassTerm(TermShape.TY_INVERSE, Fraction(-1), 1),
    ))


@dataclass(frozen=True)
class SturmTermSet:
    k: int
    t1: GammaExpr
    t2: GammaExpr
    t3: GammaExpr
    t4: GammaExpr

    def as_tuple(self) -> Tuple[GammaExpr, ...]:
        return (self.t1, self.t2, self.t3, self.t4)


def _four_pi_weight(k: int) -> Tuple[int, int]:
    """(4 pi)^(-2(s + k))."""
    return (-2, -2 * k)


def sturm_term_displays(k: int) -> SturmTermSet:
    """The four terms in closed form."""
    kk = Fraction(k)
    a, b = _four_pi_weight(k)
    lower = S + (kk - HALF)
    t1 = GammaExpr.build(2, lower * ((kk - HALF) * (kk + 1)), kk - HALF, (a, b))
    t2 = GammaExpr.build(2, lower * (S + kk) * (-2 * (kk - HALF)), kk - HALF, (a, b))
    t3 = GammaExpr.build(2, S + (kk + HALF), kk + HALF, (a, b))
    t4 = GammaExpr.build(2, 1, kk + HALF, (a, b))
    return SturmTermSet(k, t1, t2, t3, t4)


def _integrand_matrix(name: str):
    y11 = EntryPolynomial.linear(1, 0, 0)
    y22 = EntryPolynomial.linear(0, 1, 0)
    y12 = EntryPolynomial.linear(0, 0, 1)
    y = ((y11, y12), (y12, y22))
    if name == "Y":
        return y, 1
    if name == "Y*trY":
        trace = y11 + y22
        return tuple(tuple(entry * trace for entry in row) for row in y), 2
    one, zero = EntryPolynomial.constant(1), EntryPolynomial()
    return ((one, zero), (zero, one)), 0


def scalar_moment(name: str) -> Tuple[GammaExpr, int]:
    """Integral of a matrix integrand against det(Y)^s e^(-tr Y); must be a scalar matrix."""
    matrix, degree = _integrand_matrix(name)
    entries = [[integrate_entry_polynomial(matrix[i][j])[0] for j in range(2)] for i in range(2)]
    if not (entries[0][1].is_zero() and entries[1][0].is_zero() and entries[0][0] == entries[1][1]):
        raise ValueError(f"integral of {name} is not a scalar matrix")
    return entries[0][0], degree


def rederive_term(term: MaassTerm, k: int) -> GammaExpr:
    """Monomial integrals, shift s -> s + sigma0, then the scaling law at rate 4 pi."""
    name, offset = _STURM_INTEGRAND[term.shape]
    sigma0 = k + offset
    moment, degree = scalar_moment(name)
    shifted = moment.substitute(sigma0)
    # e^(-c tr Y) scales a degree-d integrand with det^(s+sigma0) by c^-(d + 2(s + sigma0))
    scaled = shifted.times_four_pi(-2, -(degree + 2 * sigma0))
    return scaled.times_four_pi(0, term.four_pi_power).scale(term.coefficient)


def sturm_terms(k: int) -> SturmTermSet:
    """t1..t4 rederived from maass_terms; t4 carries the opposite sign so that b = t1 + t2 + t3 - t4."""
    parts = [rederive_term(term, k) for term in maass_terms(k).terms]
    return SturmTermSet(k, parts[0], parts[1], parts[2], -parts[3])


def combine_b(k: int) -> GammaExpr:
    t = sturm_terms(k)
    return (t.t1 + t.t2 + t.t3 - t.t4).canonicalize()


def combine_b_expected(k: int) -> GammaExpr:
    a, b = _four_pi_weight(k)
    rat = RationalFunction(S * S - S * HALF, S + (k - 1))
    return GammaExpr.build(2, rat, Fraction(k) + HALF, (a, b))


def combine_b_numerator(k: int) -> RationalFunction:
    """combine_b(k) * (s + k - 1) / ((4 pi)^(-2(s+k)) Gamma_2(s + k + 1/2))."""
    a, b = _four_pi_weight(k)
    reference = GammaExpr.build(2, 1, Fraction(k) + HALF, (a, b))
    return combine_b(k).ratio(reference) * (S + (k - 1))


def display_normalization(k: int) -> ExactValue:
    """Gamma_2(k + 1/2) (4 pi)^(-2k-2): the factor removed in the closed-form limit."""
    return ExactValue.make(1, 2, Fraction(k) + HALF, -2 * k - 2)


def c_rho_scalar(kappa: int) -> ExactValue:
    """C(rho) = (4 pi)^(3 - (2 kappa + 1)) (kappa - 3/2) Gamma_2(kappa - 3/2)."""
    if kappa < 3:
        raise DomainError(f"c(rho) needs kappa >= 3 (Gamma_2 has a pole at kappa - 3/2); got: {kappa}")
    arg = Fraction(kappa) - Fraction(3, 2)
    try:
        return ExactValue.make(arg, 2, arg, 3 - (2 * kappa + 1))
    except PoleError as exc:
        raise DomainError(f"c(rho) undefined for kappa={kappa}: {exc}") from exc


def c_rho_alternating(m: int, q: int, kappa: int) -> ExactValue:
    """(4 pi)^((m+1) - (m kappa + q)) Gamma(st^[q] (x) det^s) at s = kappa - (m+1)/2."""
    expr = gamma_alternating(m, q).times_four_pi(0, (m + 1) - (m * kappa + q))
    s0 = Fraction(kappa) - Fraction(m + 1, 2)
    try:
        coefficient, value = expr.limit_at(s0)
    except (DivergesError, PoleError) as exc:
        raise DomainError(f"C(rho) undefined for m={m}, q={q}, kappa={kappa}: {exc}") from exc
    return ExactValue.from_limit(coefficient, value)


@dataclass(frozen=True)
class PhantomResult:
    k: int
    limit: ExactValue
    limit_c_rho: ExactValue
    numerator: RationalFunction
    weight: HighestWeight

    @property
    def nonzero(self) -> bool:
        return not self.limit.is_zero()

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "limit": str(self.limit),
            "limit_c_rho": str(self.limit_c_rho),
            "numerator": self.numerator.to_str(),
            "weight": str(self.weight),
            "harish_chandra": list(self.weight.harish_chandra_parameter()),
        }


def phantom_limit(k: int) -> PhantomResult:
    """lim_{s->0} b(T, s) as coefficient of det(T)^(-3/2) a(T), in two normalizations."""
    if k < 1:
        raise ValueError(f"k must be a positive integer; got: {k}")
    coefficient, value = combine_b(k).limit_at(0)
    raw = ExactValue.from_limit(coefficient, value)
    kappa = k + 2
    result = PhantomResult(
        k=k,
        limit=raw / display_normalization(k),
        limit_c_rho=raw / c_rho_scalar(kappa),
        numerator=combine_b_numerator(k),
        weight=HighestWeight.from_kappa_twist(kappa),
    )
    logger.debug("phantom limit k=%d: %s (c(rho) normalization %s)", k, result.limit, result.limit_c_rho)
    return result


def sturm_two_route_check(k_max: int) -> CheckReport:
    report = CheckReport("Sturm terms two routes")
    for k in range(1, k_max + 1):
        derived, display = sturm_terms(k), sturm_term_displays(k)
        for i, (a, b) in enumerate(zip(derived.as_tuple(), display.as_tuple()), start=1):
            report.check(f"k={k} t{i}", a == b, f"{a} != {b}")
    return report


def combine_b_check(k_max: int) -> CheckReport:
    report = CheckReport("b(T,s) combination")
    target = RationalFunction(S * S - S * HALF)
    for k in range(1, k_max + 1):
        report.check(f"k={k} closed form", combine_b(k) == combine_b_expected(k), str(combine_b(k)))
        numerator = combine_b_numerator(k)
        report.check(f"k={k} numerator s^2 - s/2", numerator == target, numerator.to_str())
    return report


def c_rho_check(kappa_max: int) -> CheckReport:
    report = CheckReport("c(rho) two routes")
    for kappa in range(3, kappa_max + 1):
        a, b = c_rho_scalar(kappa), c_rho_alternating(2, 1, kappa)
        report.check(f"kappa={kappa}", a == b, f"{a} != {b}")
    return report


def theorem_verdict(k_max: int) -> Tuple[CheckReport, List[Dict]]:
    """phantom_limit(k) != 0 exactly when k = 1, for 1 <= k <= k_max."""
    if k_max < 2:
        raise ValueError(f"k_max must be at least 2; got: {k_max}")
    report = CheckReport("phantom term dichotomy")
    rows = []
    for k in range(1, k_max + 1):
        result = phantom_limit(k)
        derived, display = sturm_terms(k), sturm_term_displays(k)
        two_route = all(a == b for a, b in zip(derived.as_tuple(), display.as_tuple()))
        report.check(f"k={k} nonzero iff k=1", result.nonzero == (k == 1), str(result.limit))
        report.check(f"k={k} two routes", two_route)
        if k == 1:
            expected = ExactValue.make(Fraction(-1, 2), 0, 0, 2)
            report.check("k=1 limit is -(4 pi)^2/2", result.limit == expected, str(result.limit))
        row = result.to_dict()
        row.update({"nonzero": result.nonzero, "two_route_ok": two_route,
                    "verdict": "pass" if result.nonzero == (k == 1) and two_route else "fail"})
        rows.append(row)
    return report, rows
