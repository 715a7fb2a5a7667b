#!/usr/bin/env python3
"""
The representation rho_r of GL(2) on homogeneous polynomials of degree r.

rho_r(g) P(z) = P(z * g), with z = (z1, z2) a row vector. Matrices are taken
in the monomial basis z1^(r-nu) z2^nu (nu ascending, column nu is the image of
the nu-th monomial), or in the SO(2)-weight basis

    V_k(z) = (z1 - i z2)^(r-k) (z1 + i z2)^k,   k = 0..r

whose monomial coordinates are i^nu * c_k(nu). Entries may be ints,
Fractions, GaussianRationals (exact mode) or floats/complex (numeric mode).

Usage:
    from gl2_rep import rho_matrix, weight_basis
    rho_matrix(2, [[1, 2], [3, 4]])
"""

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from combinatorics import binom, c_k_nu
from exact import I, GaussianRational

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int, int]


@dataclass(frozen=True)
class HighestWeight:
    """Dominant weight (l1, l2) of GL(2); rho_(l1,l2) = rho_(l1-l2) (x) det^l2."""

    l1: int
    l2: int

    def __post_init__(self):
        if not isinstance(self.l1, int) or not isinstance(self.l2, int):
            raise ValueError(f"highest weight entries must be integers; got: ({self.l1!r}, {self.l2!r})")
        if self.l1 < self.l2:
            raise ValueError(f"highest weight must be dominant (l1 >= l2); got: ({self.l1}, {self.l2})")

    @classmethod
    def from_kappa_twist(cls, kappa: int) -> "HighestWeight":
        """(kappa + 1, kappa): the standard representation twisted by det^kappa."""
        return cls(kappa + 1, kappa)

    @property
    def r(self) -> int:
        return self.l1 - self.l2

    @property
    def kappa(self) -> int:
        """Absolute weight, the last entry."""
        return self.l2

    def harish_chandra_parameter(self) -> Tuple[int, int]:
        return (self.l1 - 1, self.l2 - 2)

    def __str__(self):
        return f"({self.l1},{self.l2})"


def harish_chandra_parameter(l: HighestWeight) -> Tuple[int, int]:
    return l.harish_chandra_parameter()


class Basis(Enum):
    MONOMIAL = "monomial"
    WEIGHT = "weight"


@dataclass(frozen=True)
class RepMatrix:
    entries: Tuple[Tuple, ...]
    basis: Basis = Basis.MONOMIAL

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], basis: Basis = Basis.MONOMIAL) -> "RepMatrix":
        return cls(tuple(tuple(row) for row in rows), basis)

    @classmethod
    def identity(cls, dim: int, basis: Basis = Basis.MONOMIAL) -> "RepMatrix":
        return cls.from_rows(([1 if i == j else 0 for j in range(dim)] for i in range(dim)), basis)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> List:
        return [row[j] for row in self.entries]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = 0
                for l in range(n):
                    acc = acc + self.entries[i][l] * other.entries[l][j]
                row.append(acc)
            rows.append(row)
        return RepMatrix.from_rows(rows, self.basis)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex)

    def to_strings(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.entries]


def _convolve(a: Sequence, b: Sequence) -> List:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _power(form: Sequence, n: int) -> List:
    result = [1]
    for _ in range(n):
        result = _convolve(result, form)
    return result


def rho_matrix(r: int, g: Sequence[Sequence]) -> RepMatrix:
    """Matrix of rho_r(g) in the monomial basis; column nu expands (zg)_1^(r-nu) (zg)_2^nu.

    With z a row vector, rho_1(g) = g itself. Writing z as a column vector
    turns zg into g^T z, which is why rho_1 also reads as a transpose; both
    describe the same matrix.
    """
    if r < 0:
        raise ValueError(f"degree r must be non-negative; got: {r}")
    (g11, g12), (g21, g22) = g
    # coefficient lists indexed by the power of z2
    first = [g11, g21]
    second = [g12, g22]
    columns = [_convolve(_power(first, r - nu), _power(second, nu)) for nu in range(r + 1)]
    return RepMatrix.from_rows([[columns[nu][row] for nu in range(r + 1)] for row in range(r + 1)])


def _invert_exact(rows: Sequence[Sequence]) -> List[List]:
    """Gauss-Jordan inverse over an exact field (Fraction or GaussianRational entries)."""
    n = len(rows)
    work = [[GaussianRational(0) + x for x in row] + [GaussianRational(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if not work[i][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and not work[i][col].is_zero():
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


@dataclass(frozen=True)
class WeightBasis:
    """Monomial coordinates of V_0..V_r; columns[k][nu] = i^nu c_k(nu)."""

    r: int
    columns: Tuple[Tuple[GaussianRational, ...], ...]

    def matrix(self) -> RepMatrix:
        n = self.r + 1
        return RepMatrix.from_rows([[self.columns[k][nu] for k in range(n)] for nu in range(n)])

    def inverse(self) -> RepMatrix:
        return RepMatrix.from_rows(_invert_exact(self.matrix().entries), Basis.WEIGHT)

    def to_numpy(self) -> np.ndarray:
        return self.matrix().to_numpy()


def weight_basis(r: int) -> WeightBasis:
    if r < 0:
        raise ValueError(f"degree r must be non-negative; got: {r}")
    columns = tuple(
        tuple((I ** nu) * c_k_nu(r, k, nu) for nu in range(r + 1))
        for k in range(r + 1)
    )
    return WeightBasis(r, columns)


def to_weight_basis(m: RepMatrix, basis: WeightBasis = None) -> RepMatrix:
    """W^-1 M W, exact."""
    basis = basis or weight_basis(m.dim - 1)
    w = basis.matrix()
    return RepMatrix((basis.inverse() @ m @ w).entries, Basis.WEIGHT)


def rotation(theta: float) -> List[List[float]]:
    c, s = math.cos(theta), math.sin(theta)
    return [[c, -s], [s, c]]


def so2_eigenvalue(r: int, k: int, theta: float) -> complex:
    """Eigenvalue of rho_r(rotation(theta)) on V_k; the r = 1 case fixes the sign as exp(i*theta)."""
    return cmath.exp(1j * theta * (r - 2 * k))


class EntryPolynomial:
    """Sparse polynomial in (Y11, Y22, Y12); keys are exponent triples (n1, n2, n3)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Exponent, object] = None):
        self.terms: Dict[Exponent, object] = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, c) -> "EntryPolynomial":
        return cls({(0, 0, 0): c})

    @classmethod
    def linear(cls, c11=0, c22=0, c12=0) -> "EntryPolynomial":
        return cls({(1, 0, 0): c11, (0, 1, 0): c22, (0, 0, 1): c12})

    def __add__(self, other: "EntryPolynomial") -> "EntryPolynomial":
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, 0) + value
        return EntryPolynomial(terms)

    def __mul__(self, other):
        if not isinstance(other, EntryPolynomial):
            return EntryPolynomial({k: v * other for k, v in self.terms.items()})
        terms: Dict[Exponent, object] = {}
        for (a1, a2, a3), x in self.terms.items():
            for (b1, b2, b3), y in other.terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                terms[key] = terms.get(key, 0) + x * y
        return EntryPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EntryPolynomial":
        result = EntryPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def items(self):
        return sorted(self.terms.items())

    def evaluate(self, y11, y22, y12):
        acc = 0
        for (n1, n2, n3), c in self.terms.items():
            acc = acc + c * (y11 ** n1) * (y22 ** n2) * (y12 ** n3)
        return acc


def _p_k_terms(r: int, k: int, nu: int):
    if not (0 <= k <= r and 0 <= nu <= r):
        raise ValueError(f"need 0 <= k, nu <= r; got r={r}, k={k}, nu={nu}")
    for j in range(min(r - k, nu) + 1):
        weight = (-1) ** j * binom(r - k, j) * binom(k, nu - j)
        if weight:
            # exponents of A, C, B, D
            yield weight, (r - k - j, k + j - nu, j, nu - j)


def p_k_polynomial(r: int, k: int, nu: int) -> EntryPolynomial:
    """P_k(nu, Y) expanded in monomials of Y11, Y22, Y12 with Gaussian rational coefficients."""
    a = EntryPolynomial.linear(1, 0, -I)
    c = EntryPolynomial.linear(1, 0, I)
    b = EntryPolynomial.linear(0, 1, I)
    d = EntryPolynomial.linear(0, 1, -I)
    total = EntryPolynomial()
    for weight, (ea, ec, eb, ed) in _p_k_terms(r, k, nu):
        total = total + (a ** ea) * (c ** ec) * (b ** eb) * (d ** ed) * weight
    return total


def _is_exact(values) -> bool:
    return all(isinstance(v, (int, Fraction, GaussianRational)) and not isinstance(v, bool) for v in values)


def p_k_value(r: int, k: int, nu: int, y: Sequence[Sequence]):
    """P_k(nu, Y) for a symmetric 2x2 Y, exact when Y is rational."""
    y11, y12 = y[0][0], y[0][1]
    y22 = y[1][1]
    if y[1][0] != y12:
        raise ValueError("Y must be symmetric")
    i = I if _is_exact((y11, y22, y12)) else 1j
    a, c = y11 - i * y12, y11 + i * y12
    b, d = y22 + i * y12, y22 - i * y12
    total = 0
    for weight, (ea, ec, eb, ed) in _p_k_terms(r, k, nu):
        total = total + weight * (a ** ea) * (c ** ec) * (b ** eb) * (d ** ed)
    return total
