#!/usr/bin/env python3
"""
Closed-form matrix Gamma integrals in rank two and for alternating powers.

All results are GammaExpr values in the variable s:

- gamma_alternating(m, q): the scalar by which Gamma(st^[q] (x) det^s) acts
- det_derivative(n1, n2, n3): derivatives of det(T)^(-s) with the normalized
  partials d_ij = (1 + delta_ij)/2 * d/dT_ij
- monomial_integral(n1, n2, n3): integral of Y11^n1 Y22^n2 Y12^n3 det(Y)^s e^(-tr Y)
  against the invariant measure
- gamma_rk(r, k): eigenvalue of Gamma(rho_r (x) det^s) on the weight vector V_k
- gamma_operator(l): the diagonal operator for a dominant weight (l1, l2)

The check_* functions return CheckReport objects instead of raising.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from combinatorics import binom, c_k_nu, c_poly, triangle
from exact import (
    ExactValue,
    GammaExpr,
    GaussianRational,
    HalfInteger,
    PoleError,
    Poly,
    as_rational,
    format_rational,
)
from exact.gamma_expr import is_gamma_pole
from gl2_rep import EntryPolynomial, HighestWeight, p_k_polynomial
from reporting import CheckReport

logger = logging.getLogger(__name__)

S = Poly.variable()


def gamma2(rat=1) -> GammaExpr:
    """rat(s) * Gamma_2(s)."""
    return GammaExpr.build(2, rat)


# ---------------------------------------------------------------------------
# Alternating powers
# ---------------------------------------------------------------------------

def gamma_alternating(m: int, q: int) -> GammaExpr:
    """(-1)^q C_[q](-s) Gamma_m(s)."""
    if not 1 <= q <= m:
        raise ValueError(f"need 1 <= q <= m; got m={m}, q={q}")
    poly = c_poly(q).compose(-S) * ((-1) ** q)
    return GammaExpr.build(m, poly)


# ---------------------------------------------------------------------------
# Derivatives of det(T)^(-s)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DetTerm:
    """coeff * T11^t11 * T22^t22 * T12^t12 * det(T)^-(s + det_shift) * poly(s), poly monic."""

    t11: int
    t22: int
    t12: int
    det_shift: int
    coeff: Fraction
    poly: Poly

    def key(self):
        return (self.t11, self.t22, self.t12, self.det_shift)


class DetDerivative:
    """Canonical sum of DetTerms: like terms merged, sorted by exponents."""

    def __init__(self, raw: Sequence[Tuple]):
        merged: Dict[Tuple[int, int, int, int], Poly] = {}
        for coeff, t11, t22, t12, shift, poly in raw:
            key = (t11, t22, t12, shift)
            merged[key] = merged.get(key, Poly()) + poly * Fraction(coeff)
        terms = []
        for key in sorted(merged):
            total = merged[key]
            if total.is_zero():
                continue
            terms.append(DetTerm(*key, total.leading, total.monic()))
        self.terms: Tuple[DetTerm, ...] = tuple(terms)

    @classmethod
    def base(cls) -> "DetDerivative":
        """det(T)^(-s) itself."""
        return cls([(1, 0, 0, 0, 0, Poly.constant(1))])

    def __eq__(self, other):
        if not isinstance(other, DetDerivative):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def _raw(self):
        return [(t.coeff, t.t11, t.t22, t.t12, t.det_shift, t.poly) for t in self.terms]

    def d11(self) -> "DetDerivative":
        raw = []
        for c, a, b, e, n, p in self._raw():
            if a:
                raw.append((c * a, a - 1, b, e, n, p))
            raw.append((-c, a, b + 1, e, n + 1, p * Poly.linear(n)))
        return DetDerivative(raw)

    def d22(self) -> "DetDerivative":
        raw = []
        for c, a, b, e, n, p in self._raw():
            if b:
                raw.append((c * b, a, b - 1, e, n, p))
            raw.append((-c, a + 1, b, e, n + 1, p * Poly.linear(n)))
        return DetDerivative(raw)

    def d12(self) -> "DetDerivative":
        """Half the T12 partial; d12 det(T) = -T12."""
        raw = []
        for c, a, b, e, n, p in self._raw():
            if e:
                raw.append((c * Fraction(e, 2), a, b, e - 1, n, p))
            raw.append((c, a, b, e + 1, n + 1, p * Poly.linear(n)))
        return DetDerivative(raw)

    def at_identity(self) -> Poly:
        """Value at T = 1 as a polynomial in s."""
        total = Poly()
        for t in self.terms:
            if t.t12 == 0:
                total = total + t.poly * t.coeff
        return total

    def evaluate(self, t11, t22, t12, s, convert=None):
        """Numeric value; pass mpmath numbers with convert mapping Fractions to mpf."""
        det = t11 * t22 - t12 * t12
        total = 0
        for t in self.terms:
            coeff = convert(t.coeff) if convert else t.coeff
            total = total + coeff * (t11 ** t.t11) * (t22 ** t.t22) * (t12 ** t.t12) \
                * det ** (-(s + t.det_shift)) * t.poly.evaluate(s, convert)
        return total

    def to_str(self) -> str:
        parts = []
        for t in self.terms:
            mono = "".join(f"*T{name}^{p}" for name, p in (("11", t.t11), ("22", t.t22), ("12", t.t12)) if p)
            parts.append(f"{format_rational(t.coeff)}*({t.poly.factored_str()}){mono}*det^-(s+{t.det_shift})")
        return " + ".join(parts) or "0"


def _mixed_diagonal(n1: int, n2: int) -> DetDerivative:
    raw = []
    for k in range(min(n1, n2) + 1):
        coeff = factorial(k) * binom(n1, k) * binom(n2, k) * (-1) ** (n1 + n2 + k)
        raw.append((coeff, n2 - k, n1 - k, 0, n1 + n2 - k, Poly.rising(n1 + n2 - k)))
    return DetDerivative(raw)


def _off_diagonal(n: int) -> DetDerivative:
    raw = []
    for k in range(n):
        a = triangle(n - 1, k)
        if a:
            raw.append((Fraction(a, 2 ** k), 0, 0, n - 2 * k, n - k, Poly.rising(n - k)))
    return DetDerivative(raw)


def det_derivative(n1: int, n2: int, n3: int) -> DetDerivative:
    """d11^n1 d22^n2 d12^n3 det(T)^(-s): d12 closed form first, then d22, then d11."""
    if min(n1, n2, n3) < 0 or n1 + n2 + n3 == 0:
        raise ValueError(f"derivative orders must be non-negative with one positive; got ({n1},{n2},{n3})")
    if n3 == 0:
        return _mixed_diagonal(n1, n2)
    result = _off_diagonal(n3)
    for _ in range(n2):
        result = result.d22()
    for _ in range(n1):
        result = result.d11()
    return result


def det_derivative_by_product_rule(n1: int, n2: int, n3: int) -> DetDerivative:
    """Same derivative by repeated single-step product rule from det(T)^(-s)."""
    result = DetDerivative.base()
    for _ in range(n3):
        result = result.d12()
    for _ in range(n2):
        result = result.d22()
    for _ in range(n1):
        result = result.d11()
    return result


# ---------------------------------------------------------------------------
# Monomial integrals
# ---------------------------------------------------------------------------

def monomial_integral(n1: int, n2: int, n3: int) -> GammaExpr:
    if min(n1, n2, n3) < 0:
        raise ValueError(f"exponents must be non-negative; got ({n1},{n2},{n3})")
    if n3 % 2:
        return GammaExpr.zero(2)
    half = n3 // 2
    total = Poly()
    for k in range(min(n1, n2) + 1):
        weight = (-1) ** k * binom(n1, k) * binom(n2, k) * factorial(k)
        total = total + Poly.rising(n1 + n2 + half - k) * weight
    return gamma2(total * Fraction(triangle(n3 - 1, half), 2 ** half))


def monomial_integral_via_derivative(n1: int, n2: int, n3: int) -> GammaExpr:
    """(-1)^(n1+n2+n3) Gamma_2(s) * [d11^n1 d22^n2 d12^n3 det(T)^(-s)] at T = 1."""
    if n1 + n2 + n3 == 0:
        return gamma2()
    poly = det_derivative(n1, n2, n3).at_identity() * ((-1) ** (n1 + n2 + n3))
    return gamma2(poly)


def integrate_entry_polynomial(poly: EntryPolynomial) -> Tuple[GammaExpr, GammaExpr]:
    """Real and imaginary parts of the integral of a polynomial in Y entries."""
    real, imag = GammaExpr.zero(2), GammaExpr.zero(2)
    for (n1, n2, n3), coeff in poly.items():
        if n3 % 2:
            continue
        coeff = GaussianRational(0) + coeff
        integral = monomial_integral(n1, n2, n3)
        real = real + integral.scale(coeff.re)
        imag = imag + integral.scale(coeff.im)
    return real, imag


# ---------------------------------------------------------------------------
# Weight-space eigenvalues
# ---------------------------------------------------------------------------

def gamma_rk(r: int, k: int) -> GammaExpr:
    if not 0 <= k <= r:
        raise ValueError(f"need 0 <= k <= r; got r={r}, k={k}")
    if k > r // 2:
        return gamma_rk(r, r - k)
    total = Poly()
    for mu in range(r // 2 + 1):
        inner = sum(binom(k, j) * binom(r - 2 * k, 2 * (mu - j)) * (-1) ** (mu - j) for j in range(min(k, mu) + 1))
        if inner:
            weight = Fraction(triangle(2 * mu - 1, mu) * inner, 2 ** mu)
            total = total + Poly.rising(r - mu) * weight
    return gamma2(total)


def gamma_r0_second_form(r: int) -> GammaExpr:
    """Gamma(r, 0, s) from the trace expansion, written over the same rising products."""
    total = Poly()
    for mu in range(r // 2 + 1):
        inner = sum(binom(r, j) * binom(r - j, mu) * binom(j, mu) for j in range(mu, r - mu + 1))
        total = total + Poly.rising(r - mu) * (Fraction((-1) ** mu * factorial(mu), 2 ** r) * inner)
    return gamma2(total)


def gamma_r0_trace_route(r: int) -> GammaExpr:
    """2^-r times the integral of (Y11 + Y22)^r."""
    total = GammaExpr.zero(2)
    for a in range(r + 1):
        total = total + monomial_integral(a, r - a, 0).scale(binom(r, a))
    return total.scale(Fraction(1, 2 ** r))


@dataclass(frozen=True)
class GammaOperator:
    """Gamma(rho_l (x) det^s) in the weight basis V_0..V_r."""

    weight: HighestWeight
    shift: HalfInteger
    diag: Tuple[GammaExpr, ...]

    def is_palindromic(self) -> bool:
        return all(a == b for a, b in zip(self.diag, reversed(self.diag)))

    def rows(self) -> List[Dict]:
        out = []
        for k, entry in enumerate(self.diag):
            c = entry.canonicalize()
            out.append({
                "l1": self.weight.l1,
                "l2": self.weight.l2,
                "k": k,
                "expr": entry.to_str(),
                "shift": format_rational(c.gamma_shift.value),
                "num": c.rat.num.to_json(),
                "den": c.rat.den.to_json(),
            })
        return out


def gamma_operator(l: HighestWeight) -> GammaOperator:
    diag = tuple(gamma_rk(l.r, k).substitute(l.l2) for k in range(l.r + 1))
    return GammaOperator(l, HalfInteger.of(l.l2), diag)


def gamma_rk_independence_check(r: int, k: int) -> CheckReport:
    """Integrate P_k(nu, Y)/c_k(nu) for every admissible nu and compare with gamma_rk."""
    report = CheckReport(f"nu-independence r={r} k={k}")
    expected = gamma_rk(r, k)
    for nu in range(r + 1):
        c = c_k_nu(r, k, nu)
        if c == 0:
            continue
        real, imag = integrate_entry_polynomial(p_k_polynomial(r, k, nu))
        report.check(f"r={r} k={k} nu={nu} imaginary part", imag.is_zero(), f"got {imag}")
        value = real.scale(Fraction(1, c))
        report.check(f"r={r} k={k} nu={nu}", value == expected, f"{value} != {expected}")
    return report


# ---------------------------------------------------------------------------
# Symmetric square in matrix form
# ---------------------------------------------------------------------------

_BASIS_X = {
    "X1": ((1, 0), (0, 0)),
    "X2": ((0, 0), (0, 1)),
    "X12": ((0, 1), (1, 0)),
}


def adjunct(x):
    """2x2 adjugate: (x22, -x12; -x21, x11)."""
    return ((x[1][1], -x[0][1]), (-x[1][0], x[0][0]))


def _y_matrix():
    y11 = EntryPolynomial.linear(1, 0, 0)
    y22 = EntryPolynomial.linear(0, 1, 0)
    y12 = EntryPolynomial.linear(0, 0, 1)
    return ((y11, y12), (y12, y22))


def _integrate_yxy(x) -> List[List[GammaExpr]]:
    y = _y_matrix()
    result = []
    for i in range(2):
        row = []
        for j in range(2):
            entry = EntryPolynomial()
            for a in range(2):
                for b in range(2):
                    if x[a][b]:
                        entry = entry + y[i][a] * y[b][j] * x[a][b]
            real, _ = integrate_entry_polynomial(entry)
            row.append(real)
        result.append(row)
    return result


def symmetric_matrix_form(x) -> List[List[GammaExpr]]:
    """s(s+1) Gamma_2(s) X + (s/2) Gamma_2(s) adj(X), entrywise."""
    xt = adjunct(x)
    first, second = gamma2(S * (S + 1)), gamma2(S * Fraction(1, 2))
    return [[first.scale(x[i][j]) + second.scale(xt[i][j]) for j in range(2)] for i in range(2)]


def symmetric_matrix_form_check() -> CheckReport:
    report = CheckReport("symmetric square matrix form")
    for name, x in _BASIS_X.items():
        got, expected = _integrate_yxy(x), symmetric_matrix_form(x)
        for i in range(2):
            for j in range(2):
                report.check(f"{name} entry ({i + 1},{j + 1})", got[i][j] == expected[i][j],
                             f"{got[i][j]} != {expected[i][j]}")
    identity = ((1, 0), (0, 1))
    got = _integrate_yxy(identity)
    trace = got[0][0] + got[1][1]
    report.check("trace at X = 1", trace == gamma2(S * (S + Fraction(3, 2)) * 2), str(trace))
    report.check("X = 1 gives Gamma(2,1,s)", got[0][0] == gamma_rk(2, 1) and got[0][1].is_zero())
    for name, x in (("diag(1,-1)", ((1, 0), (0, -1))), ("offdiag", ((0, 1), (1, 0)))):
        got = _integrate_yxy(x)
        ok = all(got[i][j] == gamma_rk(2, 0).scale(x[i][j]) for i in range(2) for j in range(2))
        report.check(f"eigenvector {name} gives Gamma(2,0,s)", ok)
    return report


# ---------------------------------------------------------------------------
# Invertibility
# ---------------------------------------------------------------------------

@dataclass
class InvertibilityVerdict:
    weight: HighestWeight
    s0: Fraction
    invertible: bool
    polynomial_values: List[Fraction]
    vanishing: List[int]
    values: Optional[List[str]] = None

    def to_dict(self) -> Dict:
        return {
            "weight": str(self.weight),
            "s0": format_rational(self.s0),
            "invertible": self.invertible,
            "polynomial_values": [format_rational(v) for v in self.polynomial_values],
            "vanishing": self.vanishing,
            "values": self.values,
        }


def invertibility_report(l: HighestWeight, s0, with_values: bool = False) -> InvertibilityVerdict:
    """Evaluate the polynomial part of each eigenvalue Gamma(r, k, t) at t = s0 + l2."""
    s0 = as_rational(s0, "s0")
    t = s0 + l.l2
    poly_values = []
    for k in range(l.r + 1):
        e = gamma_rk(l.r, k)
        poly_values.append(e.rat.evaluate(t))
    vanishing = [k for k, v in enumerate(poly_values) if v == 0]
    values = None
    if with_values:
        if is_gamma_pole(2, t):
            raise PoleError(f"Gamma_2 has a pole at s0 + l2 = {format_rational(t)}")
        values = [str(ExactValue.make(v, 2, t)) for v in poly_values]
    logger.debug("invertibility of %s at s0=%s: vanishing %s", l, format_rational(s0), vanishing)
    return InvertibilityVerdict(l, s0, not vanishing, poly_values, vanishing, values)


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

def check_palindrome_and_divisibility(r_max: int) -> CheckReport:
    report = CheckReport("palindrome and divisibility")
    for r in range(r_max + 1):
        divisor = Poly.rising(r // 2)
        for k in range(r + 1):
            e = gamma_rk(r, k)
            report.check(f"Gamma({r},{k}) = Gamma({r},{r - k})", e == gamma_rk(r, r - k))
            _, remainder = divmod(e.rat.num, divisor)
            report.check(f"prod_(l<{r // 2}) (s+l) divides Gamma({r},{k})", remainder.is_zero(),
                         f"remainder {remainder.to_str()}")
    return report


def check_r0_forms(r_max: int) -> CheckReport:
    report = CheckReport("Gamma(r,0,s) closed forms")
    for r in range(r_max + 1):
        a, b = gamma_rk(r, 0), gamma_r0_second_form(r)
        report.check(f"r={r} two closed forms", a == b, f"{a} != {b}")
    return report


def check_trace_route(r_max: int) -> CheckReport:
    report = CheckReport("trace route")
    for r in range(r_max + 1):
        a, b = gamma_rk(r, 0), gamma_r0_trace_route(r)
        report.check(f"r={r} (Y11+Y22)^r", a == b, f"{a} != {b}")
    return report


def check_monomial_routes(total_max: int) -> CheckReport:
    """Closed-form monomial integrals against the derivative route at T = 1."""
    report = CheckReport("monomial integral routes")
    for n1 in range(total_max + 1):
        for n2 in range(total_max + 1 - n1):
            for n3 in range(total_max + 1 - n1 - n2):
                a = monomial_integral(n1, n2, n3)
                b = monomial_integral_via_derivative(n1, n2, n3)
                report.check(f"({n1},{n2},{n3})", a == b, f"{a} != {b}")
    return report


def check_det_derivative_closed_forms(total_max: int) -> CheckReport:
    report = CheckReport("det derivative closed forms")
    for n1 in range(total_max + 1):
        for n2 in range(total_max + 1 - n1):
            for n3 in range(total_max + 1 - n1 - n2):
                if n1 + n2 + n3 == 0:
                    continue
                a = det_derivative(n1, n2, n3)
                b = det_derivative_by_product_rule(n1, n2, n3)
                report.check(f"({n1},{n2},{n3})", a == b, f"{a.to_str()} != {b.to_str()}")
    return report


def check_alternating(m_max: int = 4) -> CheckReport:
    """Top alternating power is det, so Gamma(det (x) det^s) = Gamma_m(s + 1)."""
    report = CheckReport("alternating powers")
    for m in range(1, m_max + 1):
        top = gamma_alternating(m, m)
        report.check(f"m={m} q=m is Gamma_m(s+1)", top == GammaExpr.build(m, 1, 1), str(top))
    report.check("m=2 q=1 matches Gamma(1,0,s)", gamma_alternating(2, 1) == gamma_rk(1, 0))
    return report
