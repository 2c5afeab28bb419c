"""Riemann zeta everywhere in the plane by a truncated-binomial ladder.

Exact Bernoulli numbers and exact zeta(-k) come along for free.
"""

from .bernoulli import BernoulliTable, bernoulli_upto
from .dirichlet import zeta_direct
from .errors import ConvergenceError, DomainError, PoleError, ZetaError
from .ladder import (
    LadderConfig,
    RemainderSum,
    coeff_c,
    coeff_d,
    integral_I,
    remainder_T,
    zeta,
    zeta_star,
)
from .oracle import zeta_hasse
from .rational import BigRational, format_rational, parse_rational
from .result import EvaluationResult
from .special_values import zeta_neg_int

__all__ = [
    "BernoulliTable",
    "BigRational",
    "ConvergenceError",
    "DomainError",
    "EvaluationResult",
    "LadderConfig",
    "PoleError",
    "RemainderSum",
    "ZetaError",
    "bernoulli_upto",
    "coeff_c",
    "coeff_d",
    "format_rational",
    "integral_I",
    "parse_rational",
    "remainder_T",
    "zeta",
    "zeta_direct",
    "zeta_hasse",
    "zeta_neg_int",
    "zeta_star",
]
