"""Independent reference values from Hasse's globally convergent series.

    zeta(s) = 1/(1 - 2^{1-s}) * sum_{n>=0} 2^{-(n+1)} sum_{j=0}^{n} (-1)^j C(n, j) (j+1)^{-s}

The inner sums are n-th forward differences and cancel heavily, so they are
formed with exact integer binomials against powers carried at a working
precision wide enough to absorb the cancellation (mpmath is used only as an
arbitrary-precision float; the series itself is summed here).
"""

from __future__ import annotations

import math

import mpmath

from .errors import ConvergenceError, DomainError
from .result import EvaluationResult, as_point

__all__ = ["MAX_OUTER", "zeta_hasse", "zeta_hasse_mp"]

MAX_OUTER = 256
_LN2 = math.log(2.0)


def _check_domain(s: complex) -> None:
    if abs(s - 1) < 1e-9:
        raise DomainError(f"s={s} is within 1e-9 of the pole")
    # 1 - 2^{1-s} vanishes at s = 1 + 2 pi i m / ln 2
    m = round(s.imag * _LN2 / (2 * math.pi))
    if m != 0 and abs(s - complex(1, 2 * math.pi * m / _LN2)) < 1e-9:
        raise DomainError(f"s={s} is a zero of 1 - 2^(1-s)")


def zeta_hasse_mp(s, tol: float = 1e-12):
    """Return (value as mpc, n_outer, last scaled term) at high precision."""
    s = as_point(s)
    if not tol > 0:
        raise ValueError("tol must be > 0")
    _check_domain(s)
    # bits lost in the forward differences: ~n from the binomials plus the
    # spread of |(j+1)^{-s}| over j <= MAX_OUTER
    spread = max(0.0, -s.real) * math.log2(MAX_OUTER + 1)
    prec = 96 + MAX_OUTER + int(spread) + int(abs(s.imag) * 2)
    with mpmath.workprec(prec):
        S = mpmath.mpc(s.real, s.imag)
        prefactor = 1 / (1 - mpmath.power(2, 1 - S))
        pf_abs = float(abs(prefactor))
        powers = []
        total = mpmath.mpc(0)
        quiet = 0
        last = 0.0
        for n in range(MAX_OUTER):
            powers.append(mpmath.power(n + 1, -S))
            inner = mpmath.mpc(0)
            for j in range(n + 1):
                c = math.comb(n, j)
                inner += -c * powers[j] if j & 1 else c * powers[j]
            term = inner / (1 << (n + 1))
            total += term
            last = float(abs(term)) * pf_abs
            quiet = quiet + 1 if last <= tol / 4 else 0
            if quiet >= 3:
                return prefactor * total, n + 1, last
    raise ConvergenceError(
        f"Hasse series at s={s} not converged after {MAX_OUTER} outer terms"
    )


def zeta_hasse(s, tol: float = 1e-12) -> EvaluationResult:
    """zeta(s) from the Hasse series; slow but independent of the ladder."""
    value, _, last = zeta_hasse_mp(s, tol)
    # outer terms shrink roughly by half, so the tail is about one more term
    return EvaluationResult(complex(value), "hasse", 0, 2 * last + 1e-16 * float(abs(value)))
