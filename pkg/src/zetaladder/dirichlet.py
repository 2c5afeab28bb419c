"""Base-case evaluation of zeta(s) on Re(s) >= 2 by summing the series.

The partial sum sum_{n<=N} n^{-s} is completed with the integral of x^{-s}
over [N, oo), which is N^{1-s}/(s-1). Comparing each summand n^{-s} with
x^{-s} on [n-1, n] bounds what is left over:

    |sum_{n>N} n^{-s} - N^{1-s}/(s-1)| <= |s|/2 * (N^{-sigma-1} + N^{-sigma}/sigma)

so the number of terms grows like tol^{-1/sigma} rather than
tol^{-1/(sigma-1)} for the bare tail.
"""

from __future__ import annotations

import cmath
import math
from typing import Tuple

import numpy as np

from .errors import ConvergenceError, DomainError
from .result import EPS, EvaluationResult, as_point

__all__ = [
    "BASE_SIGMA",
    "partial_sum",
    "tail_bound",
    "tail_correction_bound",
    "zeta_direct",
]

BASE_SIGMA = 2.0
DIRECT_MAX_TERMS = 1 << 26

_CHUNK = 1 << 20


def _power_sums(s: complex, N: int) -> Tuple[complex, float, float]:
    """Return sum_{n<=N} n^{-s} with sum |n^{-s}| and sum |n^{-s}| ln n."""
    sigma, t = s.real, s.imag
    re_parts, im_parts, abs_parts, log_parts = [], [], [], []
    for start in range(1, N + 1, _CHUNK):
        n = np.arange(start, min(start + _CHUNK, N + 1), dtype=np.float64)
        logn = np.log(n)
        mag = np.exp(-sigma * logn)
        ang = -t * logn
        re_parts.append(float(np.sum(mag * np.cos(ang))))
        im_parts.append(float(np.sum(mag * np.sin(ang))))
        abs_parts.append(float(np.sum(mag)))
        log_parts.append(float(np.dot(mag, logn)))
    return (
        complex(math.fsum(re_parts), math.fsum(im_parts)),
        math.fsum(abs_parts),
        math.fsum(log_parts),
    )


def partial_sum(s, N: int) -> complex:
    """Raw partial sum of the defining series, no tail correction."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return _power_sums(as_point(s), N)[0]


def tail_bound(sigma: float, N: int) -> float:
    """Bound N^{1-sigma}/(sigma-1) on |sum_{n>N} n^{-s}|, valid for sigma > 1."""
    if sigma <= 1:
        raise DomainError("tail bound needs sigma > 1")
    return N ** (1.0 - sigma) / (sigma - 1.0)


def tail_correction_bound(s, N: int) -> float:
    """Bound on the error left after adding N^{1-s}/(s-1) to the N-term sum."""
    s = as_point(s)
    sigma = s.real
    if sigma <= 0:
        raise DomainError("tail correction bound needs sigma > 0")
    return 0.5 * abs(s) * (N ** (-sigma - 1.0) + N ** (-sigma) / sigma)


def _choose_terms(s: complex, tol: float) -> int:
    sigma = s.real
    budget = tol / 2
    N = max(1, math.ceil((abs(s) / (sigma * tol)) ** (1.0 / sigma)))
    while tail_correction_bound(s, N) > budget:
        N = math.ceil(N * 1.05) + 1
    return N


def _direct(s: complex, tol: float, max_terms: int = DIRECT_MAX_TERMS) -> Tuple[complex, float, int]:
    """Series value, committed error bound and term count; never raises on accuracy."""
    N = _choose_terms(s, tol)
    if N > max_terms:
        raise ConvergenceError(
            f"direct series at s={s} needs {N} terms for tol={tol:g} (cap {max_terms})"
        )
    head, abs_sum, abs_log_sum = _power_sums(s, N)
    corr = cmath.exp((1 - s) * math.log(N)) / (s - 1)
    value = head + corr
    log_n = math.log(N) if N > 1 else 0.0
    nchunks = -(-N // _CHUNK)
    rounding = EPS * (
        2 * abs(s) * abs_log_sum
        + (4 + math.log2(min(N, _CHUNK)) + nchunks) * abs_sum
        + (abs(1 - s) * log_n + 4) * abs(corr)
        + 2 * abs(value)
    )
    return value, tail_correction_bound(s, N) + rounding, N


def zeta_direct(s, tol: float = 1e-10, max_terms: int = DIRECT_MAX_TERMS) -> EvaluationResult:
    """zeta(s) for Re(s) >= 2 with an absolute error bound ``tol``."""
    s = as_point(s)
    if not tol > 0:
        raise ValueError("tol must be > 0")
    if s.real < BASE_SIGMA:
        raise DomainError(f"zeta_direct needs Re(s) >= {BASE_SIGMA}, got {s.real}")
    value, err, _ = _direct(s, tol, max_terms)
    if err > tol:
        raise ConvergenceError(
            f"rounding floor {err:.3g} exceeds tol={tol:g} at s={s}"
        )
    return EvaluationResult(value, "direct", 0, err)
