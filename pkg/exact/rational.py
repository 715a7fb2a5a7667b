"""Exact scalar types: rationals, half-integers and Gaussian rationals.

BigRational is the standard library Fraction (arbitrary-precision numerator
and denominator, always reduced). Strings use the canonical "p/q" form, with
integers written without a denominator.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigRational = Fraction

RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\s*$")

RationalLike = Union[int, Fraction, str]


def parse_rational(text: str, context: str = "value") -> Fraction:
    """Parse "p/q", an integer or a decimal literal into an exact Fraction."""
    if not isinstance(text, str):
        raise ValueError(f"{context} must be a rational string such as '3/2'; got: {text!r}")
    if RATIONAL_RE.fullmatch(text):
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise ValueError(f"{context} has a zero denominator; got: {text!r}")
        return Fraction(int(num), int(den) if den else 1)
    if DECIMAL_RE.fullmatch(text):
        return Fraction(text.strip())
    raise ValueError(f"{context} must be a rational string such as '3/2' or '2.5'; got: {text!r}")


def format_rational(q: RationalLike) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value, context: str = "value") -> Fraction:
    """Coerce int, Fraction or rational string; floats are rejected to keep values exact."""
    if isinstance(value, bool):
        raise ValueError(f"{context} must be rational; got boolean {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value, context)
    raise ValueError(f"{context} must be an int, Fraction or rational string; got: {value!r}")


@dataclass(frozen=True, order=True)
class HalfInteger:
    """Exact multiple of 1/2, stored as twice its value."""

    twice_value: int

    @classmethod
    def of(cls, value) -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        q = as_rational(value, "half-integer")
        if (2 * q).denominator != 1:
            raise ValueError(f"shift must be a multiple of 1/2; got: {format_rational(q)}")
        return cls(int(2 * q))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def split(self):
        """Return (n, sigma) with value = n + sigma, n an integer and sigma in {0, 1/2}."""
        return self.twice_value // 2, HalfInteger(self.twice_value % 2)

    def __add__(self, other):
        other = HalfInteger.of(other)
        return HalfInteger(self.twice_value + other.twice_value)

    __radd__ = __add__

    def __sub__(self, other):
        other = HalfInteger.of(other)
        return HalfInteger(self.twice_value - other.twice_value)

    def __neg__(self):
        return HalfInteger(-self.twice_value)

    def __str__(self):
        return format_rational(self.value)


def _coerce_gaussian(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational(Fraction(value), Fraction(0))
    return None


@dataclass(frozen=True)
class GaussianRational:
    """Element re + i*im of Q(i)."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re, "real part"))
        object.__setattr__(self, "im", as_rational(self.im, "imaginary part"))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = GaussianRational(Fraction(1))
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        other = _coerce_gaussian(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)} {sign} {format_rational(abs(self.im))}*i"


I = GaussianRational(Fraction(0), Fraction(1))
