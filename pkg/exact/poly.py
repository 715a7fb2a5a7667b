"""Univariate polynomials and rational functions over the rationals.

Poly stores ascending coefficients in the formal variable s and is always
normalized (no trailing zero coefficients). RationalFunction keeps numerator
and denominator coprime with a monic denominator, so structural equality is
mathematical equality.
"""

from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Tuple

from .errors import DivergesError, PoleError
from .rational import as_rational, format_rational


class Poly:
    """Immutable polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [as_rational(c, "polynomial coefficient") for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def variable(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def linear(cls, root_shift) -> "Poly":
        """The factor (s + root_shift)."""
        return cls([root_shift, 1])

    @classmethod
    def rising(cls, n: int, shift=0) -> "Poly":
        """prod_{l=0}^{n-1} (s + shift + l); the empty product is 1."""
        result = cls.constant(1)
        shift = as_rational(shift, "rising shift")
        for l in range(n):
            result = result * cls.linear(shift + l)
        return result

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "Poly":
        result = cls.constant(leading)
        for root in roots:
            result = result * cls.linear(-as_rational(root, "root"))
        return result

    # -- basic queries ------------------------------------------------------

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Poly({self.to_str()!r})"

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _lift(other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (Fraction(0),) * (n - len(self._coeffs))
        b = other._coeffs + (Fraction(0),) * (n - len(other._coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self._coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 1)
        lead = other.leading
        while len(remainder) - 1 >= other.degree and any(remainder):
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(other._coeffs):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return Poly(quotient), Poly(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading
        return Poly(c / lead for c in self._coeffs)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # -- evaluation and substitution -------------------------------------------

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x, convert: Optional[Callable] = None):
        """Horner evaluation; ``convert`` maps each coefficient into x's number type."""
        acc = None
        for c in reversed(self._coeffs):
            c = convert(c) if convert is not None else c
            acc = c if acc is None else acc * x + c
        if acc is None:
            return convert(Fraction(0)) if convert is not None else Fraction(0)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        result = Poly()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def compose_shift(self, c) -> "Poly":
        """p(s + c)."""
        return self.compose(Poly.linear(c))

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def multiplicity_at(self, point) -> int:
        """Order of vanishing at ``point``; the zero polynomial raises."""
        if self.is_zero():
            raise ValueError("multiplicity of the zero polynomial is undefined")
        point = as_rational(point, "point")
        order, p = 0, self
        factor = Poly.linear(-point)
        while p(point) == 0:
            p = p // factor
            order += 1
        return order

    def half_integer_roots(self) -> List[Tuple[Fraction, int]]:
        """Roots that are multiples of 1/2, with multiplicities, ascending.

        Each candidate h/2 is tested exactly and divided out with its full
        multiplicity before the next one. Candidates are limited to
        |h| <= 4 max |a_(n-i) / a_n|^(1/i), which bounds every complex root.
        """
        found = []
        p = self
        if p.degree >= 1:
            order = p.multiplicity_at(0)
            if order:
                found.append((Fraction(0), order))
                p = p // Poly.variable() ** order
        while p.degree >= 1:
            n, lead = p.degree, p.leading
            bound = max(float(abs(p._coeffs[n - i] / lead)) ** (1.0 / i) for i in range(1, n + 1))
            limit = int(4 * bound) + 1
            root = None
            for h in range(1, limit + 1):
                for cand in (Fraction(-h, 2), Fraction(h, 2)):
                    if p(cand) == 0:
                        root = cand
                        break
                if root is not None:
                    break
            if root is None:
                break
            order = p.multiplicity_at(root)
            found.append((root, order))
            p = p // Poly.linear(-root) ** order
        return sorted(found)

    # -- formatting ---------------------------------------------------------

    def to_str(self, var: str = "s") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = format_rational(mag)
            else:
                mono = var if power == 1 else f"{var}^{power}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def factored_str(self, var: str = "s") -> str:
        """Render as leading*(s - a)^k*...*(rest), splitting off half-integer roots."""
        if self.degree < 1:
            return self.to_str(var)
        rest = self
        factors = []
        for root, mult in reversed(self.half_integer_roots()):
            rest = rest // (Poly.linear(-root) ** mult)
            if root == 0:
                text = var
            else:
                op = "+" if root < 0 else "-"
                text = f"({var} {op} {format_rational(abs(root))})"
            factors.append(text if mult == 1 else f"{text}^{mult}")
        if rest.degree >= 1:
            lead = rest.leading
            if lead != 1:
                factors.insert(0, format_rational(lead))
            factors.append(f"({rest.monic().to_str(var)})")
        elif rest.leading != 1:
            factors.insert(0, format_rational(rest.leading))
        return "*".join(factors)

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self._coeffs] or ["0"]

    @classmethod
    def from_json(cls, data: List[str]) -> "Poly":
        return cls(as_rational(c, "polynomial coefficient") for c in data)


class RationalFunction:
    """Reduced quotient num/den of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._lift(num) if not isinstance(num, Poly) else num
        den = Poly.constant(1) if den is None else (Poly._lift(den) if not isinstance(den, Poly) else den)
        if num is None or den is None:
            raise ValueError("rational function parts must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.constant(1)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            num = Poly(c / lead for c in num.coefficients)
            den = den.monic()
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def lift(cls, value) -> Optional["RationalFunction"]:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Poly):
            return cls(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(Poly.constant(value))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.to_str()!r})"

    def __add__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = RationalFunction.lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return RationalFunction(1) / (self ** (-exponent))
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x, convert: Optional[Callable] = None):
        den = self.den.evaluate(x, convert)
        if den == 0:
            raise PoleError(f"rational function {self.to_str()} has a pole at s = {x}")
        return self.num.evaluate(x, convert) / den

    def compose_shift(self, c) -> "RationalFunction":
        return RationalFunction(self.num.compose_shift(c), self.den.compose_shift(c))

    def limit_at(self, point) -> Fraction:
        """Exact limit at ``point`` via orders of vanishing of numerator and denominator."""
        point = as_rational(point, "limit point")
        if self.num.is_zero():
            return Fraction(0)
        a = self.num.multiplicity_at(point)
        b = self.den.multiplicity_at(point)
        if a > b:
            return Fraction(0)
        if a < b:
            raise DivergesError(f"{self.to_str()} diverges at s = {format_rational(point)}")
        factor = Poly.linear(-point) ** a
        return (self.num // factor)(point) / (self.den // factor)(point)

    def to_str(self, var: str = "s") -> str:
        if self.is_polynomial():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def factored_str(self, var: str = "s") -> str:
        if self.is_polynomial():
            return self.num.factored_str(var)
        return f"{self.num.factored_str(var)}/({self.den.factored_str(var)})"
