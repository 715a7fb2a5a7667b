"""Symbolic Gamma expressions rat(s) * Gamma_m(s + sigma) * (4*pi)^(a*s + b).

Gamma_m(z) = pi^(m(m-1)/4) * prod_{nu<m} Gamma(z - nu/2) is never expanded;
identities are decided on the canonical form, in which the shift sigma is
reduced to 0 or 1/2 by absorbing integer steps into the rational part through
Gamma_m(z + 1) = prod_{nu<m} (z - nu/2) * Gamma_m(z).

JSON form::

    {"m": 2, "shift": "1/2", "num": ["-1/2", "1"], "den": ["1"],
     "four_pi": {"a": "-2", "b": "-4"}}
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple, Union

import mpmath

from .errors import IncompatibleExpr, PoleError
from .poly import Poly, RationalFunction
from .rational import HalfInteger, as_rational, format_rational

logger = logging.getLogger(__name__)

EVAL_DPS = 30

Scalar = Union[int, Fraction]


def _mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def gamma_step(m: int) -> Poly:
    """prod_{nu=0}^{m-1} (z - nu/2), the factor of one unit shift of Gamma_m."""
    return Poly.from_roots(Fraction(nu, 2) for nu in range(m))


def shift_factor(m: int, base: HalfInteger, n: int) -> RationalFunction:
    """R(s) with Gamma_m(s + base + n) = R(s) * Gamma_m(s + base)."""
    step = gamma_step(m)
    factor = RationalFunction(1)
    if n >= 0:
        for j in range(n):
            factor = factor * step.compose_shift(base.value + j)
    else:
        for j in range(1, -n + 1):
            factor = factor / step.compose_shift(base.value - j)
    return factor


def is_gamma_pole(m: int, z) -> bool:
    """True when some Gamma(z - nu/2), nu < m, sits at a non-positive integer."""
    for nu in range(m):
        if isinstance(z, Fraction):
            w = z - Fraction(nu, 2)
            if w <= 0 and w.denominator == 1:
                return True
        else:
            w = z - mpmath.mpf(nu) / 2
            if w <= 0 and mpmath.isint(w):
                return True
    return False


def regular_base(m: int, z: Fraction) -> Fraction:
    """Smallest z' = z mod 1 with z' > (m-1)/2, where Gamma_m is finite and nonzero."""
    threshold = Fraction(m - 1, 2)
    n = (threshold - z) // 1 + 1
    return z + n


def gamma_ratio(m: int, a: Fraction, n: int) -> Fraction:
    """Gamma_m(a + n) / Gamma_m(a) for exact a, raising PoleError when a or a + n is a pole."""
    step = gamma_step(m)
    ratio = Fraction(1)
    if n >= 0:
        for j in range(n):
            value = step(a + j)
            if value == 0:
                raise PoleError(f"Gamma_{m} has a pole at {format_rational(a)}")
            ratio *= value
    else:
        for j in range(1, -n + 1):
            value = step(a - j)
            if value == 0:
                raise PoleError(f"Gamma_{m} has a pole at {format_rational(a + n)}")
            ratio /= value
    return ratio


def gamma_m_value(m: int, z):
    """Gamma_m(z) as an mpmath number at the working precision."""
    if is_gamma_pole(m, z):
        raise PoleError(f"Gamma_{m} has a pole at {z}")
    x = _mp(z) if isinstance(z, Fraction) else mpmath.mpf(z)
    value = mpmath.pi ** (mpmath.mpf(m * (m - 1)) / 4)
    for nu in range(m):
        value *= mpmath.gamma(x - mpmath.mpf(nu) / 2)
    return value


def _four_pi_str(a: Fraction, b: Fraction) -> str:
    return Poly([b, a]).to_str("s")


@dataclass(frozen=True, eq=False)
class GammaExpr:
    rank_m: int
    rat: RationalFunction
    gamma_shift: HalfInteger
    four_pi_exp: Tuple[Fraction, Fraction]

    @classmethod
    def build(cls, m: int, rat=1, shift=0, four_pi=(0, 0)) -> "GammaExpr":
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"Gamma rank must be a positive integer; got: {m!r}")
        lifted = RationalFunction.lift(rat)
        if lifted is None:
            raise ValueError(f"rational part must be a Poly, RationalFunction or rational; got: {rat!r}")
        a, b = four_pi
        return cls(m, lifted, HalfInteger.of(shift),
                   (as_rational(a, "4pi slope"), as_rational(b, "4pi offset")))

    @classmethod
    def zero(cls, m: int = 2) -> "GammaExpr":
        return cls.build(m, 0)

    def is_zero(self) -> bool:
        return self.rat.is_zero()

    def rebase(self, target) -> "GammaExpr":
        """Rewrite over Gamma_m(s + target); target - shift must be an integer."""
        target = HalfInteger.of(target)
        diff = self.gamma_shift - target
        if not diff.is_integer:
            raise IncompatibleExpr(
                f"cannot rebase Gamma_{self.rank_m}(s + {self.gamma_shift}) onto shift {target}"
            )
        factor = shift_factor(self.rank_m, target, diff.twice_value // 2)
        return GammaExpr(self.rank_m, self.rat * factor, target, self.four_pi_exp)

    def canonicalize(self) -> "GammaExpr":
        if self.is_zero():
            return GammaExpr(self.rank_m, RationalFunction(0), HalfInteger(0), (Fraction(0), Fraction(0)))
        _, sigma = self.gamma_shift.split()
        return self.rebase(sigma)

    def _key(self):
        c = self.canonicalize()
        return (c.rank_m, c.rat, c.gamma_shift, c.four_pi_exp)

    def __eq__(self, other):
        if not isinstance(other, GammaExpr):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # -- algebra ------------------------------------------------------------

    def add(self, other: "GammaExpr") -> "GammaExpr":
        a, b = self.canonicalize(), other.canonicalize()
        if a.rank_m != b.rank_m:
            raise IncompatibleExpr(f"cannot add Gamma_{a.rank_m} and Gamma_{b.rank_m} expressions")
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        if a.gamma_shift != b.gamma_shift:
            raise IncompatibleExpr(
                f"cannot add Gamma_{a.rank_m}(s + {a.gamma_shift}) and Gamma_{b.rank_m}(s + {b.gamma_shift})"
            )
        if a.four_pi_exp != b.four_pi_exp:
            raise IncompatibleExpr(
                f"cannot add terms with (4*pi)^({_four_pi_str(*a.four_pi_exp)}) "
                f"and (4*pi)^({_four_pi_str(*b.four_pi_exp)})"
            )
        return GammaExpr(a.rank_m, a.rat + b.rat, a.gamma_shift, a.four_pi_exp).canonicalize()

    def __add__(self, other):
        if not isinstance(other, GammaExpr):
            return NotImplemented
        return self.add(other)

    def __neg__(self):
        return GammaExpr(self.rank_m, -self.rat, self.gamma_shift, self.four_pi_exp)

    def __sub__(self, other):
        if not isinstance(other, GammaExpr):
            return NotImplemented
        return self.add(-other)

    def scale(self, factor) -> "GammaExpr":
        lifted = RationalFunction.lift(factor)
        if lifted is None:
            raise ValueError(f"cannot scale a Gamma expression by {factor!r}")
        return GammaExpr(self.rank_m, self.rat * lifted, self.gamma_shift, self.four_pi_exp)

    def __mul__(self, factor):
        if RationalFunction.lift(factor) is None:
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def times_four_pi(self, a=0, b=0) -> "GammaExpr":
        """Multiply by (4*pi)^(a*s + b)."""
        alpha, beta = self.four_pi_exp
        return GammaExpr(self.rank_m, self.rat, self.gamma_shift,
                         (alpha + as_rational(a), beta + as_rational(b)))

    def substitute(self, c) -> "GammaExpr":
        """Replace s by s + c, with c a multiple of 1/2."""
        c = HalfInteger.of(c)
        alpha, beta = self.four_pi_exp
        return GammaExpr(self.rank_m, self.rat.compose_shift(c.value), self.gamma_shift + c,
                         (alpha, beta + alpha * c.value))

    def ratio(self, other: "GammaExpr") -> RationalFunction:
        """self / other as a rational function when the transcendental parts cancel."""
        a, b = self.canonicalize(), other.canonicalize()
        if b.is_zero():
            raise ZeroDivisionError("ratio by the zero Gamma expression")
        if a.is_zero():
            return RationalFunction(0)
        if a.rank_m != b.rank_m or a.gamma_shift != b.gamma_shift or a.four_pi_exp != b.four_pi_exp:
            raise IncompatibleExpr(f"{a.to_str()} and {b.to_str()} differ by a transcendental factor")
        return a.rat / b.rat

    # -- evaluation ------------------------------------------------------------

    def eval_numeric(self, s0) -> float:
        """Evaluate the stored representation at s0; Gamma poles are not cancelled."""
        exact = not isinstance(s0, float)
        if exact:
            s0 = as_rational(s0, "evaluation point")
        with mpmath.workdps(EVAL_DPS):
            if exact:
                z = s0 + self.gamma_shift.value
                rat_value = _mp(self.rat.evaluate(s0))
                x = _mp(s0)
            else:
                x = mpmath.mpf(s0)
                z = x + _mp(self.gamma_shift.value)
                rat_value = self.rat.evaluate(x, convert=_mp)
            if is_gamma_pole(self.rank_m, z):
                raise PoleError(f"Gamma_{self.rank_m}(s + {self.gamma_shift}) has a pole at s = {s0}")
            alpha, beta = self.four_pi_exp
            power = (4 * mpmath.pi) ** (_mp(alpha) * x + _mp(beta))
            value = rat_value * gamma_m_value(self.rank_m, z) * power
            return float(value)

    def limit_at(self, s0) -> Tuple[Fraction, "GammaValue"]:
        """Exact limit as s -> s0, returned as rational coefficient times a Gamma value."""
        s0 = as_rational(s0, "limit point")
        e = self.canonicalize()
        base = regular_base(e.rank_m, s0 + e.gamma_shift.value)
        target = HalfInteger.of(base - s0)
        coefficient = e.rebase(target).rat.limit_at(s0)
        alpha, beta = e.four_pi_exp
        logger.debug("limit of %s at s=%s rebased onto Gamma_%d(%s)",
                     e.to_str(), format_rational(s0), e.rank_m, format_rational(base))
        return coefficient, GammaValue(e.rank_m, base, alpha * s0 + beta)

    # -- serialization -----------------------------------------------------------

    def to_str(self, var: str = "s") -> str:
        if self.is_zero():
            return "0"
        shift = self.gamma_shift.value
        arg = var if shift == 0 else f"{var} {'+' if shift > 0 else '-'} {format_rational(abs(shift))}"
        text = f"{self.rat.factored_str(var)}*Gamma_{self.rank_m}({arg})"
        if self.four_pi_exp != (0, 0):
            text += f"*(4*pi)^({_four_pi_str(*self.four_pi_exp)})"
        return text

    def __str__(self):
        return self.to_str()

    def to_json(self) -> Dict[str, Any]:
        c = self.canonicalize()
        a, b = c.four_pi_exp
        return {
            "m": c.rank_m,
            "shift": format_rational(c.gamma_shift.value),
            "num": c.rat.num.to_json(),
            "den": c.rat.den.to_json(),
            "four_pi": {"a": format_rational(a), "b": format_rational(b)},
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "GammaExpr":
        rat = RationalFunction(Poly.from_json(data["num"]), Poly.from_json(data["den"]))
        four = data.get("four_pi", {"a": "0", "b": "0"})
        return cls.build(int(data["m"]), rat, data["shift"], (four["a"], four["b"]))


@dataclass(frozen=True)
class GammaValue:
    """Gamma_m(argument) * (4*pi)^four_pi at an exact point."""

    rank_m: int
    argument: Fraction
    four_pi: Fraction

    def to_float(self) -> float:
        with mpmath.workdps(EVAL_DPS):
            return float(gamma_m_value(self.rank_m, self.argument) * (4 * mpmath.pi) ** _mp(self.four_pi))

    def __str__(self):
        return str(ExactValue.make(1, self.rank_m, self.argument, self.four_pi))


@dataclass(frozen=True)
class ExactValue:
    """coefficient * Gamma_m(gamma_argument) * (4*pi)^four_pi; rank_m = 0 means no Gamma factor."""

    coefficient: Fraction
    rank_m: int = 0
    gamma_argument: Fraction = Fraction(0)
    four_pi: Fraction = Fraction(0)

    @classmethod
    def make(cls, coefficient, rank_m: int = 0, gamma_argument=0, four_pi=0) -> "ExactValue":
        coefficient = as_rational(coefficient, "coefficient")
        gamma_argument = as_rational(gamma_argument, "Gamma argument")
        four_pi = as_rational(four_pi, "4pi exponent")
        if coefficient == 0:
            return cls(Fraction(0))
        if rank_m == 0:
            return cls(coefficient, 0, Fraction(0), four_pi)
        base = regular_base(rank_m, gamma_argument)
        # Gamma_m(arg) = Gamma_m(base) / (Gamma_m(base) / Gamma_m(arg))
        coefficient = coefficient / gamma_ratio(rank_m, gamma_argument, int(base - gamma_argument))
        return cls(coefficient, rank_m, base, four_pi)

    @classmethod
    def from_limit(cls, coefficient: Fraction, value: GammaValue) -> "ExactValue":
        return cls.make(coefficient, value.rank_m, value.argument, value.four_pi)

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactValue.make(self.coefficient * other, self.rank_m, self.gamma_argument, self.four_pi)
        if not isinstance(other, ExactValue):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ExactValue.make(0)
        if self.rank_m and other.rank_m:
            raise IncompatibleExpr("product of two Gamma values is not representable")
        rank, arg = (self.rank_m, self.gamma_argument) if self.rank_m else (other.rank_m, other.gamma_argument)
        return ExactValue.make(self.coefficient * other.coefficient, rank, arg, self.four_pi + other.four_pi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        if not isinstance(other, ExactValue):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by an exact zero")
        if self.is_zero():
            return ExactValue.make(0)
        if other.rank_m == 0:
            return ExactValue.make(self.coefficient / other.coefficient, self.rank_m,
                                   self.gamma_argument, self.four_pi - other.four_pi)
        if (self.rank_m, self.gamma_argument) != (other.rank_m, other.gamma_argument):
            raise IncompatibleExpr(f"{self} / {other} leaves a Gamma quotient")
        return ExactValue.make(self.coefficient / other.coefficient, 0, 0, self.four_pi - other.four_pi)

    def to_float(self) -> float:
        with mpmath.workdps(EVAL_DPS):
            value = _mp(self.coefficient) * (4 * mpmath.pi) ** _mp(self.four_pi)
            if self.rank_m:
                value *= gamma_m_value(self.rank_m, self.gamma_argument)
            return float(value)

    def __str__(self):
        if self.is_zero():
            return "0"
        coefficient, b = self.coefficient, self.four_pi
        factors = []
        if b.denominator == 1 and not self.rank_m:
            coefficient = coefficient * Fraction(4) ** int(b)
            if b != 0:
                factors.append("pi" if b == 1 else (f"pi^{int(b)}" if b > 0 else f"pi^({int(b)})"))
        else:
            if self.rank_m:
                factors.append(f"Gamma_{self.rank_m}({format_rational(self.gamma_argument)})")
            if b != 0:
                factors.append(f"(4*pi)^({format_rational(b)})")
        if not factors:
            return format_rational(coefficient)
        body = "*".join(factors)
        if coefficient == 1:
            return body
        if coefficient == -1:
            return "-" + body
        return f"{format_rational(coefficient)}*{body}"


def canonicalize(e: GammaExpr) -> GammaExpr:
    return e.canonicalize()


def add(a: GammaExpr, b: GammaExpr) -> GammaExpr:
    return a.add(b)


def eval_numeric(e: GammaExpr, s0) -> float:
    return e.eval_numeric(s0)


def limit_at(e: GammaExpr, s0) -> Tuple[Fraction, GammaValue]:
    return e.limit_at(s0)
