"""
Exact arithmetic layer: rationals, Gaussian rationals, polynomials and
symbolic Gamma_m expressions.
"""

from .errors import (
    ConvergenceWarning,
    DivergesError,
    DomainError,
    IncompatibleExpr,
    PoleError,
    StepSizeError,
)
from .rational import (
    I,
    BigRational,
    GaussianRational,
    HalfInteger,
    as_rational,
    format_rational,
    parse_rational,
)
from .poly import Poly, RationalFunction
from .gamma_expr import (
    ExactValue,
    GammaExpr,
    GammaValue,
    add,
    canonicalize,
    eval_numeric,
    gamma_m_value,
    limit_at,
)

__all__ = [
    "BigRational",
    "ConvergenceWarning",
    "DivergesError",
    "DomainError",
    "ExactValue",
    "GammaExpr",
    "GammaValue",
    "GaussianRational",
    "HalfInteger",
    "I",
    "IncompatibleExpr",
    "PoleError",
    "Poly",
    "RationalFunction",
    "StepSizeError",
    "add",
    "as_rational",
    "canonicalize",
    "eval_numeric",
    "format_rational",
    "gamma_m_value",
    "limit_at",
    "parse_rational",
]
