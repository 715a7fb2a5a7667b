#!/usr/bin/env python3
"""
Triangle numbers and binomial bookkeeping for the rank-two Gamma integrals.

The triangle numbers a(n, m) are defined by a(n, 0) = 1, a(0, m) = 0 for
m > 0 and

    a(n, m) = (n - 2(m - 1)) * a(n-1, m-1) + a(n-1, m)

They control the T12-derivatives of det(T)^(-s). a(-1, 0) = 1 is stored as a
special case used by the monomial integrals.

Usage:
    from combinatorics import triangle, verify_triangle_closed_forms
    triangle(4, 2)                       # 15
    verify_triangle_closed_forms(200).passed
"""

import logging
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List

from exact import Poly
from reporting import CheckReport

logger = logging.getLogger(__name__)


class TriangleTable:
    """Row-wise memo of a(n, m); rows are filled under a lock and never mutated after."""

    def __init__(self):
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    def _ensure(self, n: int):
        if n < len(self._rows):
            return
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                i = len(self._rows)
                row = [1]
                for m in range(1, i // 2 + 2):
                    left = prev[m - 1] if m - 1 < len(prev) else 0
                    up = prev[m] if m < len(prev) else 0
                    row.append((i - 2 * (m - 1)) * left + up)
                while len(row) > 1 and row[-1] == 0:
                    row.pop()
                self._rows.append(row)
            logger.debug("triangle table filled through n=%d", n)

    def get(self, n: int, m: int) -> int:
        if m < 0:
            return 0
        if n == -1:
            return 1 if m == 0 else 0
        if n < 0:
            return 0
        self._ensure(n)
        row = self._rows[n]
        return row[m] if m < len(row) else 0

    def rows(self, n_max: int) -> List[List[int]]:
        self._ensure(n_max)
        return [list(r) for r in self._rows[: n_max + 1]]

    def recursion_violations(self, n_max: int) -> List[str]:
        """Re-check every stored entry against the defining recursion."""
        problems = []
        for n in range(1, n_max + 1):
            for m in range(1, n // 2 + 2):
                expected = (n - 2 * (m - 1)) * self.get(n - 1, m - 1) + self.get(n - 1, m)
                if self.get(n, m) != expected:
                    problems.append(f"a({n},{m}) = {self.get(n, m)} but recursion gives {expected}")
        return problems


_TABLE = TriangleTable()


def triangle(n: int, m: int) -> int:
    return _TABLE.get(n, m)


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever an argument is out of range."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def verify_triangle_closed_forms(n_max: int) -> CheckReport:
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2; got: {n_max}")
    report = CheckReport("triangle numbers")
    t = _TABLE

    violations = t.recursion_violations(n_max)
    report.check("recursion", not violations, "; ".join(violations[:5]))
    for n in range(n_max + 1):
        report.check(f"a({n},1) = n(n+1)/2", t.get(n, 1) == n * (n + 1) // 2)
        report.check(f"a({n},2) = n(n+1)(n-1)(n-2)/8",
                     8 * t.get(n, 2) == n * (n + 1) * (n - 1) * (n - 2))
        bound = (n + 1) // 2
        report.check(f"a({n},m) = 0 for m > {bound}",
                     all(t.get(n, m) == 0 for m in range(bound + 1, bound + 3)))
    for nu in range(1, n_max // 2 + 1):
        report.check(f"a({2 * nu - 1},{nu}) = a({2 * nu - 2},{nu - 1})",
                     t.get(2 * nu - 1, nu) == t.get(2 * nu - 2, nu - 1))
    for mu in range(0, (n_max + 1) // 2 + 1):
        df = double_factorial(2 * mu - 1)
        report.check(f"a({2 * mu - 1},{mu}) = ({2 * mu - 1})!!", t.get(2 * mu - 1, mu) == df)
        report.check(f"a({2 * mu - 1},{mu}) = (2mu)!/(2^mu mu!)",
                     t.get(2 * mu - 1, mu) * 2 ** mu * factorial(mu) == factorial(2 * mu))
        if mu >= 1:
            report.check(f"a({2 * mu - 1},{mu - 1}) = {mu}*({2 * mu - 1})!!",
                         t.get(2 * mu - 1, mu - 1) == mu * df)
            if 2 * mu <= n_max:
                report.check(f"a({2 * mu},{mu - 1}) = ({mu}/3)*({2 * mu + 1})!!",
                             3 * t.get(2 * mu, mu - 1) == mu * double_factorial(2 * mu + 1))
    return report


def triangle_rows(n_max: int) -> List[Dict]:
    """Flat (n, m, value, recursion_ok) rows for table output."""
    rows = []
    for n, row in enumerate(_TABLE.rows(n_max)):
        for m, value in enumerate(row):
            if n == 0 or m == 0:
                ok = value == (1 if m == 0 else 0)
            else:
                ok = value == (n - 2 * (m - 1)) * triangle(n - 1, m - 1) + triangle(n - 1, m)
            rows.append({"n": n, "m": m, "value": str(value), "recursion_ok": ok})
    return rows


def c_poly(q: int) -> Poly:
    """C_[q](x) = x(x + 1/2)...(x + (q-1)/2)."""
    if q < 1:
        raise ValueError(f"q must be a positive integer; got: {q}")
    return Poly.from_roots(Fraction(-j, 2) for j in range(q))


def c_k_nu(r: int, k: int, nu: int) -> int:
    """Coordinate of V_k at z1^(r-nu) z2^nu with the i^nu factor removed."""
    if not (0 <= k <= r and 0 <= nu <= r):
        raise ValueError(f"need 0 <= k, nu <= r; got r={r}, k={k}, nu={nu}")
    return sum((-1) ** j * binom(r - k, j) * binom(k, nu - j) for j in range(min(r - k, nu) + 1))


def binomial_identity_sides(r: int, mu: int):
    """(mu!/2^r) sum_j C(r,j)C(r-j,mu)C(j,mu) and C(r,2mu) a(2mu-1,mu)/2^mu."""
    lhs = Fraction(factorial(mu), 2 ** r) * sum(
        binom(r, j) * binom(r - j, mu) * binom(j, mu) for j in range(mu, r - mu + 1)
    )
    rhs = Fraction(binom(r, 2 * mu) * triangle(2 * mu - 1, mu), 2 ** mu)
    return lhs, rhs


def binomial_identity_check(r_max: int) -> CheckReport:
    if r_max < 1:
        raise ValueError(f"r_max must be at least 1; got: {r_max}")
    report = CheckReport("binomial identity")
    for r in range(r_max + 1):
        for mu in range(r // 2 + 1):
            lhs, rhs = binomial_identity_sides(r, mu)
            report.check(f"r={r} mu={mu}", lhs == rhs, f"{lhs} != {rhs}")
    return report
