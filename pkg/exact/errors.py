"""Domain exceptions raised by the exact and numeric layers.

Value-shaped problems (mixing incompatible expressions, asking for an
operation outside its domain, a bad finite-difference step) derive from
ValueError; analytic failures (poles, divergent limits) derive from
ArithmeticError so callers can catch them alongside ZeroDivisionError.
"""


class IncompatibleExpr(ValueError):
    """Two Gamma expressions cannot be combined exactly."""


class PoleError(ArithmeticError):
    """Evaluation point is a pole of the rational part or of Gamma_m."""


class DivergesError(ArithmeticError):
    """A limit does not exist because the denominator vanishes to higher order."""


class DomainError(ValueError):
    """Parameter lies outside the range where the quantity is defined."""


class StepSizeError(ValueError):
    """Finite-difference estimate is dominated by round-off noise."""


class ConvergenceWarning(UserWarning):
    """Quadrature results at successive orders disagree by more than the tolerance."""
