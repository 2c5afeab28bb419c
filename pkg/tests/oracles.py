"""Reference computations that share no code path with the package."""

from __future__ import annotations

from fractions import Fraction
from typing import List

import mpmath
import numpy as np


def bernoulli_akiyama_tanigawa(n: int) -> List[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle, converted to B_1 = -1/2."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def zeta_brute(s: complex, N: int = 2_000_000) -> complex:
    """Partial sum to N plus integral tail and endpoint half-term, summed backwards."""
    n = np.arange(N, 0, -1, dtype=np.float64)
    terms = np.exp(-complex(s) * np.log(n))
    tail = N ** (1 - s) / (s - 1) - N ** (-s) / 2
    return complex(np.sum(terms)) + tail


def integral_quad(s: complex, n: int) -> complex:
    f = lambda x: (1 + x / n) ** (-mpmath.mpc(s))
    return complex(mpmath.quad(f, [0, 1]))


def zeta_eta_cvz(s: complex, terms: int = 60) -> complex:
    """zeta via the alternating eta series with Cohen-Villegas-Zagier acceleration."""
    with mpmath.workdps(40):
        S = mpmath.mpc(s)
        d = (3 + mpmath.sqrt(8)) ** terms
        d = (d + 1 / d) / 2
        b = mpmath.mpf(-1)
        c = -d
        total = mpmath.mpc(0)
        for k in range(terms):
            c = b - c
            total += c * mpmath.power(k + 1, -S)
            b = b * (k + terms) * (k - terms) / ((k + mpmath.mpf(0.5)) * (k + 1))
        eta = total / d
        return complex(eta / (1 - mpmath.power(2, 1 - S)))
