#!/usr/bin/env python3
"""
Deterministic numeric cross-checks for the closed forms.

Integrals over positive definite 2x2 matrices use the Weyl parameterization
Y = k_theta diag(t1, t2) k_theta^T on the ordered region t1 > t2 > 0 with
theta in [0, pi), where dY = (t1 - t2) dt1 dt2 dtheta. Writing t1 = v and
t2 = v*w (0 < w < 1) separates the radial part:

    v-integral   generalized Gauss-Laguerre, weight y^(2 sigma + 2) e^(-y)
    w-integral   Gauss-Jacobi on [0, 1], weight w^sigma (1 - w)
    theta        trapezoid with theta_points nodes (exact for trig polynomials)

where sigma = s0 + l2 - 3/2 is the det exponent against dY. The integrand
left for Gauss-Jacobi is analytic on [0, 1], so the rule converges
spectrally for every sigma > -1. The global constant is calibrated once
against Gamma_2 on the scalar case.

Finite-difference checks run in mpmath (det derivatives, high orders) or in
double precision with fourth-order stencils (Maass shift).

Usage:
    from numeric_oracle import QuadratureSpec, compare_all
    report = compare_all(QuadratureSpec(), r_max=4)
"""

import itertools
import logging
import random
import threading
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np
from scipy.special import gammaln, multigammaln, roots_genlaguerre, roots_jacobi

from exact import ConvergenceWarning, DomainError, StepSizeError, as_rational, format_rational, gamma_m_value
from exact.gamma_expr import _mp
from gamma_engine import det_derivative, gamma_alternating, gamma_operator
from gl2_rep import HighestWeight, rho_matrix, rotation, weight_basis
from reporting import OracleReport
from sturm_phantom import maass_terms

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]

FD_DPS = 40
NOISE_FLOOR = 1e-8

# det-twisted weights (l2 >= 1), checked at every s value
TWISTED_WEIGHTS = (HighestWeight(1, 1), HighestWeight(2, 1), HighestWeight(3, 1), HighestWeight(2, 2))


def _parse_s(value) -> Number:
    if isinstance(value, (float, Fraction)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return as_rational(value, "s value")


@dataclass(frozen=True)
class QuadratureSpec:
    laguerre_order: int = 80
    theta_points: int = 64
    s_values: Tuple[Number, ...] = (Fraction(5, 2), Fraction(7, 2), 3.1)
    tol: float = 1e-6
    exact_tol: float = 1e-10
    diag_tol: float = 1e-9
    weyl_tol: float = 1e-8
    maass_tol: float = 1e-5
    maass_step: float = 1e-3
    calibration_s: Fraction = Fraction(5, 2)

    def __post_init__(self):
        if self.laguerre_order < 2:
            raise ValueError(f"laguerre_order must be at least 2; got: {self.laguerre_order}")
        if self.theta_points < 1:
            raise ValueError(f"theta_points must be positive; got: {self.theta_points}")
        object.__setattr__(self, "s_values", tuple(_parse_s(v) for v in self.s_values))
        object.__setattr__(self, "calibration_s", as_rational(self.calibration_s, "calibration_s"))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QuadratureSpec":
        """Build from a config mapping; numbers in s_values are floats, strings are exact."""
        known = {f for f in cls.__dataclass_fields__}
        kwargs = {k: v for k, v in data.items() if k in known}
        if "s_values" in kwargs:
            kwargs["s_values"] = tuple(kwargs["s_values"])
        return cls(**kwargs)

    def with_overrides(self, **overrides) -> "QuadratureSpec":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "laguerre_order": self.laguerre_order,
            "theta_points": self.theta_points,
            "s_values": [format_rational(v) if isinstance(v, Fraction) else v for v in self.s_values],
            "tol": self.tol,
            "exact_tol": self.exact_tol,
            "diag_tol": self.diag_tol,
            "weyl_tol": self.weyl_tol,
            "maass_tol": self.maass_tol,
            "maass_step": self.maass_step,
            "calibration_s": format_rational(self.calibration_s),
        }


def is_exactness_case(s0: Number, l2: int = 0) -> bool:
    """Half-integer s0 with s0 + l2 - 3/2 a non-negative integer."""
    if not isinstance(s0, Fraction):
        return False
    d = s0 + l2 - Fraction(3, 2)
    return d >= 0 and d.denominator == 1


# ---------------------------------------------------------------------------
# Quadrature
# ---------------------------------------------------------------------------

def _radial_moments(r: int, sigma: float, rate: float, order: int) -> np.ndarray:
    """R_nu = int_{t1>t2>0} t1^(r-nu) t2^nu (t1 t2)^sigma (t1 - t2) e^(-rate(t1+t2)), nu = 0..r."""
    p = r + 2 * sigma + 3
    y, wy = roots_genlaguerre(order, 2 * sigma + 2)
    x, wx = roots_jacobi(order, 1.0, sigma)
    w = (1.0 + x) / 2.0
    v_part = np.sum(wy * y ** r)
    w_weights = wx * 2.0 ** (-(sigma + 2)) * (rate * (1.0 + w)) ** (-p)
    return np.array([v_part * np.sum(w_weights * w ** nu) for nu in range(r + 1)])


def _theta_average(r: int, radial: np.ndarray, theta_points: int) -> np.ndarray:
    """sum_j (pi/M) rho(k_j) diag(radial) rho(k_j^T)."""
    total = np.zeros((r + 1, r + 1))
    d = np.diag(radial)
    step = np.pi / theta_points
    for j in range(theta_points):
        theta = j * step
        k = np.real(rho_matrix(r, rotation(theta)).to_numpy())
        kt = np.real(rho_matrix(r, rotation(-theta)).to_numpy())
        total = total + step * (k @ d @ kt)
    return total


def _raw_integral(r: int, sigma: float, rate: float, order: int, theta_points: int) -> np.ndarray:
    return _theta_average(r, _radial_moments(r, sigma, rate, order), theta_points)


_CALIBRATION: Dict[Tuple, float] = {}
_CALIBRATION_LOCK = threading.Lock()


def calibration_constant(spec: QuadratureSpec) -> float:
    """Gamma_2(calibration_s) divided by the uncalibrated scalar quadrature."""
    key = (spec.laguerre_order, spec.theta_points, spec.calibration_s)
    with _CALIBRATION_LOCK:
        if key not in _CALIBRATION:
            s0 = spec.calibration_s
            raw = _raw_integral(0, float(s0) - 1.5, 1.0, spec.laguerre_order, spec.theta_points)[0, 0]
            with mpmath.workdps(30):
                exact = float(gamma_m_value(2, s0))
            _CALIBRATION[key] = exact / raw
            logger.debug("calibrated quadrature constant %.17g at s=%s", _CALIBRATION[key], format_rational(s0))
        return _CALIBRATION[key]


def integrate_gamma_numeric(l: HighestWeight, s0: Number, spec: QuadratureSpec,
                            rate: float = 1.0) -> np.ndarray:
    """int rho_l(Y) det(Y)^s0 e^(-rate tr Y) dY_inv in the monomial basis.

    The ordered region is swept as t1 = v, t2 = v*w. This is the same
    region as t1 = t2 + u with t2, u > 0 (u = v (1 - w)), so the value equals
    the one from that substitution; only the quadrature nodes differ.
    """
    sigma = float(s0) + l.l2 - 1.5
    if sigma <= -1.0:
        raise DomainError(f"integral diverges: need s0 + l2 > 1/2; got s0={s0}, l2={l.l2}")
    r = l.r
    full = _raw_integral(r, sigma, rate, spec.laguerre_order, spec.theta_points)
    half = _raw_integral(r, sigma, rate, max(spec.laguerre_order // 2, 1), spec.theta_points)
    scale = max(np.max(np.abs(full)), 1e-300)
    drift = np.max(np.abs(full - half)) / scale
    if drift > spec.tol:
        warnings.warn(
            f"quadrature for weight {l} at s0={s0} changed by {drift:.3e} between orders "
            f"{spec.laguerre_order // 2} and {spec.laguerre_order}",
            ConvergenceWarning,
        )
    return full * calibration_constant(spec)


def to_weight_coordinates(matrix: np.ndarray) -> np.ndarray:
    r = matrix.shape[0] - 1
    w = weight_basis(r).to_numpy()
    return np.linalg.solve(w, matrix @ w)


def off_diagonal_ratio(matrix: np.ndarray) -> float:
    diag = np.abs(np.diag(matrix))
    off = np.abs(matrix - np.diag(np.diag(matrix)))
    return float(np.max(off) / max(np.max(diag), 1e-300))


# ---------------------------------------------------------------------------
# Ordered-region scalar check
# ---------------------------------------------------------------------------

def weyl_detk_check(k: int, spec: QuadratureSpec) -> OracleReport:
    """int_{t2>t1>0} (t1 t2)^(k-3/2) (t1 - t2) e^(-t1-t2) = -Gamma(k)Gamma(k-1/2)/sqrt(pi)."""
    if k < 2:
        raise ValueError(f"k must be at least 2; got: {k}")
    report = OracleReport(f"ordered det^{k} integral")
    # swapping t1 and t2 flips the sign of (t1 - t2)
    numeric = -_radial_moments(0, k - 1.5, 1.0, spec.laguerre_order)[0]
    with mpmath.workdps(30):
        closed = float(-mpmath.gamma(k) * mpmath.gamma(k - mpmath.mpf(1) / 2) / mpmath.sqrt(mpmath.pi))
        legendre = float(-mpmath.mpf(2) ** (2 - 2 * k) * mpmath.gamma(2 * k - 1))
        gamma2 = float(gamma_m_value(2, Fraction(k)))
    report.compare(f"k={k} -Gamma(k)Gamma(k-1/2)/sqrt(pi)", closed, numeric, spec.weyl_tol)
    report.compare(f"k={k} -2^(2-2k)Gamma(2k-1)", legendre, numeric, spec.weyl_tol)
    report.compare(f"k={k} -pi * integral = Gamma_2(k)", gamma2, -np.pi * numeric, spec.weyl_tol)
    return report


# ---------------------------------------------------------------------------
# Finite differences
# ---------------------------------------------------------------------------

def _central_difference(f, point: Sequence, orders: Sequence[int], h):
    """Tensor product of central differences delta^n f / h^n, error O(h^2)."""
    total = 0
    axes = [range(n + 1) for n in orders]
    for combo in itertools.product(*axes):
        coeff = 1
        shifted = list(point)
        for axis, (n, j) in enumerate(zip(orders, combo)):
            coeff *= (-1) ** j * comb(n, j)
            shifted[axis] = shifted[axis] + (mpmath.mpf(n) / 2 - j) * h
        total = total + coeff * f(*shifted)
    return total / h ** sum(orders)


def det_derivative_fd_check(n1: int, n2: int, n3: int, t: Sequence[Sequence], s,
                            h: float = 1e-5, tol: float = 1e-6) -> OracleReport:
    """Closed-form derivative of det(T)^(-s) against Richardson-extrapolated central differences."""
    report = OracleReport(f"det derivative ({n1},{n2},{n3})")
    expr = det_derivative(n1, n2, n3)
    with mpmath.workdps(FD_DPS):
        t11, t12, t22 = (_mp(as_rational(v)) if not isinstance(v, float) else mpmath.mpf(v)
                         for v in (t[0][0], t[0][1], t[1][1]))
        s_mp = _mp(as_rational(s)) if not isinstance(s, float) else mpmath.mpf(s)
        closed = expr.evaluate(t11, t22, t12, s_mp, convert=_mp)

        def f(a, b, c):
            return (a * b - c * c) ** (-s_mp)

        hh = mpmath.mpf(h)
        coarse = _central_difference(f, (t11, t22, t12), (n1, n2, n3), hh)
        fine = _central_difference(f, (t11, t22, t12), (n1, n2, n3), hh / 2)
        numeric = (4 * fine - coarse) / 3 * mpmath.mpf(1) / 2 ** n3
        label = "[" + "; ".join(" ".join(str(v) for v in row) for row in t) + "]"
        report.compare(f"({n1},{n2},{n3}) at T={label}, s={s}", float(closed), float(numeric), tol)
    return report


# coordinate order: x11, x22, x12, y11, y22, y12
_FIRST = ((-2, 1.0 / 12), (-1, -8.0 / 12), (1, 8.0 / 12), (2, -1.0 / 12))
_SECOND = ((-2, -1.0 / 12), (-1, 16.0 / 12), (0, -30.0 / 12), (1, 16.0 / 12), (2, -1.0 / 12))


def _maass_integrand(k: int, t: np.ndarray):
    def f(c: np.ndarray) -> np.ndarray:
        z = np.array([[c[0] + 1j * c[3], c[2] + 1j * c[5]], [c[2] + 1j * c[5], c[1] + 1j * c[4]]])
        y = np.array([[c[3], c[5]], [c[5], c[4]]])
        return np.linalg.det(y) ** (k - 0.5) * y * np.exp(2j * np.pi * np.trace(t @ z))
    return f


def _second_partial(f, c: np.ndarray, a: int, b: int, h: float) -> np.ndarray:
    total = np.zeros((2, 2), dtype=complex)
    if a == b:
        for o, w in _SECOND:
            e = c.copy()
            e[a] += o * h
            total = total + w * f(e)
        return total / h ** 2
    for oa, wa in _FIRST:
        for ob, wb in _FIRST:
            e = c.copy()
            e[a] += oa * h
            e[b] += ob * h
            total = total + wa * wb * f(e)
    return total / h ** 2


def _det_wirtinger(f, c: np.ndarray, h: float) -> np.ndarray:
    """det(d_Z) = d11 d22 - d12^2 with d_ij = (1 + delta_ij)/4 (d/dX_ij - i d/dY_ij)."""
    d = lambda a, b: _second_partial(f, c, a, b, h)
    diag = 0.25 * (d(0, 1) - 1j * d(0, 4) - 1j * d(3, 1) - d(3, 4))
    off = (d(2, 2) - 2j * d(2, 5) - d(5, 5)) / 16.0
    return diag - off


def maass_shift_fd(k: int, t, z0, h: float) -> np.ndarray:
    """(2i)^2 det(Y)^-(k-1/2) Y^-1 det(d_Z)(det(Y)^(k-1/2) Y e^(2 pi i tr(TZ))) with Richardson."""
    t = np.asarray(t, dtype=float)
    z0 = np.asarray(z0, dtype=complex)
    y0 = z0.imag
    c = np.array([z0.real[0, 0], z0.real[1, 1], z0.real[0, 1], y0[0, 0], y0[1, 1], y0[0, 1]])
    f = _maass_integrand(k, t)
    d1, d2, d4 = (_det_wirtinger(f, c, h / m) for m in (1, 2, 4))
    scale = max(np.max(np.abs(d2)), 1e-300)
    rel_d1 = np.max(np.abs(d2 - d1)) / scale
    rel_d2 = np.max(np.abs(d4 - d2)) / scale
    if rel_d2 > max(rel_d1, NOISE_FLOOR):
        raise StepSizeError(
            f"step h={h} is noise dominated: successive differences {rel_d1:.2e} then {rel_d2:.2e}"
        )
    extrapolated = (16 * d2 - d1) / 15
    prefactor = -4 * np.linalg.det(y0) ** (-(k - 0.5)) * np.linalg.inv(y0)
    return prefactor @ extrapolated


def maass_fd_check(k: int, t, z0, h: Optional[float] = None, tol: float = 1e-5) -> OracleReport:
    h = 1e-3 if h is None else h
    if not 1e-6 <= h <= 1e-3:
        raise ValueError(f"finite-difference step must lie in [1e-6, 1e-3]; got: {h}")
    z0 = np.asarray(z0, dtype=complex)
    if np.any(np.linalg.eigvalsh(z0.imag) <= 0):
        raise ValueError("Im Z0 must be positive definite")
    t_arr = np.asarray(t, dtype=float)
    report = OracleReport(f"Maass shift k={k}")
    terms = maass_terms(k)
    closed = terms.evaluate(t_arr, z0)
    numeric = maass_shift_fd(k, t_arr, z0, h)
    error = np.max(np.abs(numeric - closed)) / max(np.max(np.abs(closed)), np.max(np.abs(numeric)), 1e-300)
    label = f"k={k} T={np.asarray(t).tolist()}"
    report.record(f"{label} four-term formula", error, tol,
                  closed_form=abs(closed[0, 0]), numeric=abs(numeric[0, 0]))
    residual = numeric - terms.scalar_part(t_arr, z0) * np.eye(2)
    shape = np.linalg.inv(t_arr @ z0.imag)
    coeff = np.vdot(shape, residual) / np.vdot(shape, shape)
    shape_error = np.max(np.abs(residual - coeff * shape)) / max(np.max(np.abs(residual)), 1e-300)
    report.record(f"{label} non-scalar part is (TY)^-1", shape_error, tol)
    return report


# ---------------------------------------------------------------------------
# Aggregate
# ---------------------------------------------------------------------------

def _tolerance(spec: QuadratureSpec, s0: Number, l2: int = 0) -> float:
    return spec.exact_tol if is_exactness_case(s0, l2) else spec.tol


def _label(s0: Number) -> str:
    return format_rational(s0) if isinstance(s0, Fraction) else repr(s0)


def check_weight(l: HighestWeight, s0: Number, spec: QuadratureSpec, report: OracleReport,
                 rate: float = 1.0):
    """Numeric Gamma matrix for weight l: diagonal in the V_k basis with the closed-form entries."""
    operator = gamma_operator(l)
    numeric = to_weight_coordinates(integrate_gamma_numeric(l, s0, spec, rate=rate))
    tol = _tolerance(spec, s0, l.l2)
    scaling = rate ** (-(l.r + 2 * (float(s0) + l.l2)))
    tag = f"l={l} s0={_label(s0)}" + (f" rate={rate:.6g}" if rate != 1.0 else "")
    report.record(f"{tag} off-diagonal mass", off_diagonal_ratio(numeric), spec.diag_tol)
    closed_trace = 0.0
    for k, entry in enumerate(operator.diag):
        closed = entry.eval_numeric(s0) * scaling
        closed_trace += closed
        report.compare(f"{tag} k={k}", closed, numeric[k, k].real, tol)
    report.compare(f"{tag} trace", closed_trace, float(np.trace(numeric).real), tol)


def compare_all(spec: QuadratureSpec, r_max: int = 4) -> OracleReport:
    report = OracleReport("numeric oracle")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConvergenceWarning)
        for s0 in spec.s_values:
            with mpmath.workdps(30):
                exact = float(gamma_m_value(2, s0))
            numeric = integrate_gamma_numeric(HighestWeight(0, 0), s0, spec)[0, 0]
            report.compare(f"calibration Gamma_2({_label(s0)})", exact, numeric, _tolerance(spec, s0))
        for r in range(r_max + 1):
            for s0 in spec.s_values:
                check_weight(HighestWeight(r, 0), s0, spec, report)
        for l in TWISTED_WEIGHTS:
            for s0 in spec.s_values:
                check_weight(l, s0, spec, report)
        s_first = spec.s_values[0]
        for r in range(min(r_max, 2) + 1):
            check_weight(HighestWeight(r, 0), s_first, spec, report, rate=4 * np.pi)
        for k in (2, 3, 4):
            report.extend(weyl_detk_check(k, spec))
        for q in (1, 2, 3):
            closed = gamma_alternating(3, q).eval_numeric(Fraction(3))
            prefactor = np.prod([3.0 - j / 2.0 for j in range(q)])
            report.compare(f"Gamma_3 alternating q={q} at s=3", closed,
                           prefactor * np.exp(multigammaln(3.0, 3)), 1e-12)
        # Gamma_2(s) = sqrt(pi) Gamma(s) Gamma(s - 1/2) through scipy's log-gamma
        report.compare("Gamma_2(3.1) via gammaln", float(gamma_m_value(2, 3.1)),
                       np.exp(0.5 * np.log(np.pi) + gammaln(3.1) + gammaln(2.6)), 1e-12)
    for w in caught:
        if issubclass(w.category, ConvergenceWarning):
            report.warnings.append(str(w.message))
    logger.info("numeric oracle: %d cases, %d failed, %d warnings",
                len(report.cases), len(report.failures), len(report.warnings))
    return report


def random_positive_point(rng: random.Random) -> Tuple[List[List[Fraction]], Fraction]:
    """Rational positive definite T with T12 != 0 and s > 1/2."""
    t11 = Fraction(rng.randint(2, 8), 2)
    t22 = Fraction(rng.randint(2, 8), 2)
    t12 = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), 4)
    return [[t11, t12], [t12, t22]], Fraction(rng.randint(3, 12), 4)


def det_derivative_sweep(seed: int = 0, points: int = 5, total_max: int = 5,
                         tol: float = 1e-6) -> OracleReport:
    """Every order n1+n2+n3 <= total_max at seeded random (T, s) points."""
    rng = random.Random(seed)
    report = OracleReport("det derivative finite differences")
    for _ in range(points):
        t, s = random_positive_point(rng)
        for n1 in range(total_max + 1):
            for n2 in range(total_max + 1 - n1):
                for n3 in range(total_max + 1 - n1 - n2):
                    if n1 + n2 + n3:
                        report.extend(det_derivative_fd_check(n1, n2, n3, t, s, tol=tol))
    return report
