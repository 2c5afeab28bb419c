"""Analytic continuation of zeta by the truncated binomial relation.

For Re(s) > 1 and every integer k >= 0,

    1/(s-1) = zeta(s) + sum_{r=0}^{k} c_r(s) zeta(s+r+1) + T(s, k),

    c_r(s) = (-1)^{r+1} s(s+1)...(s+r) / (r+2)!,

where the remainder T(s, k) = sum_n n^{-s} [I_n(s) - sum_{r<=k+1} b_r(s)/((r+1) n^r)]
is analytic on Re(s) > -(k+1). Here I_n(s) is the integral of (1+x/n)^{-s}
over [0, 1] and b_r(s) are the binomial-series coefficients of (1+y)^{-s}.
Solving for zeta(s) moves the domain k+1 strips to the left; the zeta values
on the right are obtained the same way until Re >= base_sigma, where the
Dirichlet series takes over.

Everything is carried on the pole-subtracted function
zeta*(s) = zeta(s) - 1/(s-1), which is entire. When a rung argument s+r+1
comes close to 1 the product c_r(s) zeta(s+r+1) is rewritten as
c_r(s) zeta*(s+r+1) + d_r(s) with d_r(s) = c_r(s)/(s+r) a polynomial.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

import numpy as np

from .dirichlet import BASE_SIGMA, _direct
from .errors import ConvergenceError, DomainError, PoleError
from .result import EPS, EvaluationResult, as_point

__all__ = [
    "LadderConfig",
    "RemainderSum",
    "coeff_c",
    "coeff_d",
    "default_depth",
    "integral_I",
    "remainder_T",
    "remainder_term",
    "zeta",
    "zeta_star",
]

BOUNDARY_SLACK = 0.05
# I_n(s) switches to its power series in (1-s) below this |(1-s) ln(1+1/n)|.
_SERIES_SWITCH = 0.5


@dataclass(frozen=True)
class LadderConfig:
    tol: float = 1e-10
    base_sigma: float = BASE_SIGMA
    max_terms: int = 5_000_000
    pole_window: float = 0.5
    pole_guard: float = 1e-12

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if not self.base_sigma >= 2:
            raise ValueError("base_sigma must be >= 2")
        if not 0 < self.pole_guard < self.pole_window <= 0.5:
            raise ValueError("need 0 < pole_guard < pole_window <= 0.5")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


@dataclass(frozen=True)
class RemainderSum:
    s: complex
    k: int
    value: complex
    terms_used: int
    tail_bound: float
    rounding: float = 0.0

    @property
    def err_estimate(self) -> float:
        return self.tail_bound + self.rounding


def coeff_c(s, r: int) -> complex:
    """(-1)^{r+1} s(s+1)...(s+r)/(r+2)!, as a running product."""
    s = complex(s)
    c = -s / 2
    for j in range(1, r + 1):
        c *= -(s + j) / (j + 2)
    return c


def coeff_d(s, r: int) -> complex:
    """coeff_c(s, r) with the factor (s+r) removed; finite at s = -r."""
    s = complex(s)
    d = -0.5 + 0j
    for j in range(1, r + 1):
        d *= -(s + j - 1) / (j + 2)
    return d


def _binomial_coeffs(s: complex, upto: int) -> List[complex]:
    """b_r(s) = (-1)^r s(s+1)...(s+r-1)/r! for r = 0..upto."""
    b = [1 + 0j]
    for r in range(upto):
        b.append(b[-1] * (-(s + r) / (r + 1)))
    return b


def _expm1_over(z: complex) -> complex:
    """(e^z - 1)/z by its power series, for |z| <= _SERIES_SWITCH."""
    total = 1 + 0j
    term = 1 + 0j
    j = 1
    while True:
        term *= z / (j + 1)
        total += term
        if abs(term) <= 1e-18 * abs(total):
            return total
        j += 1


def integral_I(s, n: int) -> complex:
    """Integral of (1+x/n)^{-s} over [0, 1]."""
    s = complex(s)
    if n < 1:
        raise ValueError("n must be >= 1")
    L = math.log1p(1.0 / n)
    u = 1 - s
    z = u * L
    if abs(z) <= _SERIES_SWITCH:
        # n ((1+1/n)^u - 1)/u = n L (e^{uL} - 1)/(uL); exact at s = 1.
        return n * L * _expm1_over(z)
    return n * (cmath.exp(z) - 1) / u


def default_depth(s, base_sigma: float = BASE_SIGMA) -> int:
    return max(0, math.ceil(base_sigma - complex(s).real))


def _ratio_bound(s: complex, k: int, n: float) -> float:
    # |t_{r+1}/t_r| = |s+r|/((r+2) n) <= (1 + |s-2|/(k+4))/n for r >= k+2
    return (1.0 + abs(s - 2) / (k + 4)) / n


def _small_n_terms(s: complex, k: int, b: List[complex], n_lo: int, n_hi: int) -> Tuple[List[complex], List[float]]:
    """Remainder summands for n_lo <= n < n_hi, evaluated one at a time.

    Each summand is formed either as I_n minus the truncated series or by
    summing the binomial tail directly; whichever has the smaller rounding
    bound is kept. n = 1 always uses the closed form.
    """
    terms, errs = [], []
    for n in range(n_lo, n_hi):
        logn = math.log(n)
        lead = cmath.exp(-s * logn)
        lead_rel = EPS * (abs(s) * logn + 4)
        inner, inner_err = _closed_form_inner(s, k, b, n)
        if n >= 2:
            alt, alt_err = _binomial_tail(s, k, n)
            if alt_err < inner_err:
                inner, inner_err = alt, alt_err
        terms.append(lead * inner)
        errs.append(abs(lead) * (inner_err + lead_rel * abs(inner)))
    return terms, errs


def _closed_form_inner(s: complex, k: int, b: List[complex], n: int) -> Tuple[complex, float]:
    head = integral_I(s, n)
    z = (1 - s) * math.log1p(1.0 / n)
    head_err = EPS * (abs(z) + 8) * (abs(head) + n * abs(cmath.exp(z)) / max(abs(1 - s), 1.0))
    parts = [b[r] / ((r + 1) * n**r) for r in range(k + 2)]
    inner = head - math.fsum(p.real for p in parts) - 1j * math.fsum(p.imag for p in parts)
    err = head_err + EPS * sum((r + 3) * abs(p) for r, p in enumerate(parts)) + 2 * EPS * abs(inner)
    return inner, err


def _binomial_tail(s: complex, k: int, n: int) -> Tuple[complex, float]:
    """sum_{r >= k+2} b_r(s)/((r+1) n^r) for a single n >= 2."""
    t = _binomial_coeffs(s, k + 2)[-1] / ((k + 3) * n ** (k + 2))
    parts = [t]
    err = EPS * (k + 6) * abs(t)
    peak = abs(t)
    r = k + 2
    while True:
        t *= -(s + r) / ((r + 2) * n)
        r += 1
        parts.append(t)
        # the running product picks up a few roundings per step
        err += EPS * (3 * (r - k) + k + 6) * abs(t)
        peak = max(peak, abs(t))
        if t == 0:
            break
        q = _ratio_bound(s, r - 2, n)
        # with every later ratio below q < 1 the rest is a dominated geometric tail
        if q < 1 and abs(t) * q / (1 - q) <= 1e-2 * EPS * peak:
            err += abs(t) * q / (1 - q)
            break
        if len(parts) > 100_000:
            raise ConvergenceError(f"binomial tail did not converge at s={s}, n={n}")
    total = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    return total, err + EPS * abs(total)


def _large_n_terms(s: complex, k: int, a: List[complex], n_lo: int, n_hi: int) -> Tuple[np.ndarray, float]:
    """Vectorised summands for n_lo <= n < n_hi, all with ratio bound <= 1/2.

    The binomial tail is truncated after len(a) terms; a is chosen so the
    dropped part is below 2^-60 of the leading term.
    """
    n = np.arange(n_lo, n_hi, dtype=np.float64)
    x = 1.0 / n
    poly = np.full(n.shape, a[-1], dtype=np.complex128)
    for coef in reversed(a[:-1]):
        poly = poly * x + coef
    logn = np.log(n)
    mag = np.exp(-(s.real + k + 2) * logn)
    ang = -s.imag * logn
    lead = mag * (np.cos(ang) + 1j * np.sin(ang))
    terms = lead * poly
    rel = EPS * (abs(s + k + 2) * logn + len(a) + 8)
    rounding = float(np.sum(np.abs(terms) * rel))
    return terms, rounding


def remainder_term(s, k: int, n: int) -> complex:
    """The single summand n^{-s} [I_n(s) - sum_{r<=k+1} b_r(s)/((r+1) n^r)]."""
    s = as_point(s)
    if n < 1:
        raise ValueError("n must be >= 1")
    terms, _ = _small_n_terms(s, k, _binomial_coeffs(s, k + 2), n, n + 1)
    return terms[0]


def remainder_T(s, k: int, cfg: Optional[LadderConfig] = None) -> RemainderSum:
    """The remainder T(s, k) of the truncated relation, summed over n.

    Summation stops once three consecutive summands satisfy
    |term_n| <= tol/(4n) and the tail past N is bounded by tol/4. The
    bound uses |term_n| <= A n^{-(sigma+k+2)}/(1-q) with A = |b_{k+2}|/(k+3),
    valid where the binomial ratio bound q is at most 1/2.
    """
    cfg = cfg or LadderConfig()
    s = as_point(s)
    if k < 0:
        raise ValueError("k must be >= 0")
    sigma = s.real
    if not sigma > -(k + 1) + BOUNDARY_SLACK:
        raise DomainError(
            f"remainder T(s, {k}) needs Re(s) > {-(k + 1) + BOUNDARY_SLACK}, got {sigma}"
        )
    tol = cfg.tol
    p1 = sigma + k + 1  # tail exponent after integrating n^{-(sigma+k+2)}
    b = _binomial_coeffs(s, k + 2)
    A = abs(b[k + 2]) / (k + 3)

    n_sw = max(2, math.ceil(2 * (1.0 + abs(s - 2) / (k + 4))))

    def rig_tail(N: int) -> float:
        if A == 0:
            return 0.0
        q = _ratio_bound(s, k, N)
        return A / (1 - q) * N ** (-p1) / p1

    if A == 0:
        N = n_sw
    else:
        N_tail = (8 * A / (p1 * tol)) ** (1 / p1)
        N_term = (8 * A / tol) ** (1 / p1)
        N = max(n_sw, math.ceil(max(N_tail, N_term + 2)))
    if N > cfg.max_terms:
        raise ConvergenceError(
            f"remainder T(s={s}, k={k}) needs about {N} terms (cap {cfg.max_terms})"
        )

    small, small_err = _small_n_terms(s, k, b, 1, min(n_sw, N + 1))
    n_done = min(n_sw, N + 1)

    # series coefficients a_j = b_{k+2+j}/(k+3+j) with a fixed truncation for n >= n_sw
    q_sw = _ratio_bound(s, k, n_sw)
    m = max(1, math.ceil(60 * math.log(2) / -math.log(q_sw))) if q_sw > 0 else 1
    a = []
    coef = b[k + 2]
    for j in range(m + 1):
        a.append(coef / (k + 3 + j))
        coef *= -(s + k + 2 + j) / (k + 3 + j)

    chunks: List[np.ndarray] = []
    rounding = math.fsum(small_err)
    while True:
        if n_done <= N:
            terms, rnd = _large_n_terms(s, k, a, n_done, N + 1)
            chunks.append(terms)
            rounding += rnd
            n_done = N + 1
        last = _last_terms(small, chunks, 3)
        ok_terms = all(abs(v) <= tol / (4 * n) for n, v in zip(range(N - 2, N + 1), last))
        heur = abs(last[-1]) * N / p1
        tail = max(rig_tail(N), heur)
        if ok_terms and tail <= tol / 4:
            break
        N = 2 * N
        if N > cfg.max_terms:
            raise ConvergenceError(
                f"remainder T(s={s}, k={k}) not converged within {cfg.max_terms} terms"
            )

    flat = np.concatenate([np.asarray(small, dtype=np.complex128)] + chunks)
    value = complex(math.fsum(flat.real), math.fsum(flat.imag))
    rounding += EPS * 2 * abs(value)
    return RemainderSum(s, k, value, N, tail, rounding)


def _last_terms(small: List[complex], chunks: List[np.ndarray], count: int) -> List[complex]:
    out: List[complex] = []
    for arr in reversed(chunks):
        for v in arr[::-1]:
            out.append(complex(v))
            if len(out) == count:
                return out[::-1]
    for v in reversed(small):
        out.append(v)
        if len(out) == count:
            break
    while len(out) < count:
        out.append(0j)
    return out[::-1]


@dataclass
class _Rung:
    j: int
    w: complex
    k: int  # -1 marks a Dirichlet-series leaf
    children: List[Tuple[int, int, complex, Optional[complex]]]  # (r, child, c_r, d_r or None)


class _Ladder:
    """One top-level evaluation over the rung arguments s0 + j, j >= 0.

    The recursion is linear in the remainders and series values, so the
    rungs form a DAG: each offset is evaluated once, and the sensitivity of
    the top value to each rung's local error is found by propagating the
    signed coefficients downward. Truncation budgets are split so that
    sum_j |sensitivity_j| * local_error_j <= tol.
    """

    def __init__(self, s0: complex, cfg: LadderConfig, depth: Optional[int] = None):
        self.s0 = s0
        self.cfg = cfg
        self.rungs: Dict[int, _Rung] = {}
        pending = [0]
        while pending:
            j = pending.pop()
            if j in self.rungs:
                continue
            rung = self._make_rung(j, depth if j == 0 else None)
            self.rungs[j] = rung
            pending.extend(child for _, child, _, _ in rung.children)

        self.sens: Dict[int, complex] = {j: 0j for j in self.rungs}
        self.sens[0] = 1 + 0j
        for j in sorted(self.rungs):
            for _, child, c, _ in self.rungs[j].children:
                if c != 0:
                    self.sens[child] += -c * self.sens[j]

    def arg(self, j: int) -> complex:
        return complex(self.s0.real + j, self.s0.imag)

    def _make_rung(self, j: int, depth: Optional[int]) -> _Rung:
        cfg = self.cfg
        w = self.arg(j)
        if depth is None and w.real >= cfg.base_sigma:
            return _Rung(j, w, -1, [])
        k = default_depth(w, cfg.base_sigma) if depth is None else depth
        if not w.real > -(k + 1) + BOUNDARY_SLACK:
            raise DomainError(
                f"depth {k} is too shallow for Re(s) = {w.real}; "
                f"need Re(s) > {-(k + 1) + BOUNDARY_SLACK}"
            )
        children = []
        for r in range(k + 1):
            c = coeff_c(w, r)
            d = coeff_d(w, r) if abs(w + r) < cfg.pole_window else None
            if c != 0 or d is not None:
                children.append((r, j + r + 1, c, d))
        return _Rung(j, w, k, children)

    def run(self) -> Tuple[complex, float, int]:
        """Evaluate every rung; return (top value, error bound, top depth).

        Ladder rungs hold zeta*(w); leaves hold zeta(w).
        """
        n_rungs = len(self.rungs)
        budget = self.cfg.tol / (2 * n_rungs)
        values: Dict[int, complex] = {}
        total_err = 0.0
        for j in sorted(self.rungs, reverse=True):
            rung = self.rungs[j]
            g = abs(self.sens[j])
            local_tol = min(budget / g, 1.0) if g > 0 else 1.0
            if rung.k < 0:
                value, err, _ = _direct(rung.w, local_tol)
            else:
                value, err = self._ladder_rung(rung, values, local_tol)
            values[j] = value
            total_err += g * err
        top = self.rungs[0]
        return values[0], total_err, max(top.k, 0)

    def _ladder_rung(self, rung: _Rung, values: Dict[int, complex], local_tol: float) -> Tuple[complex, float]:
        parts: List[complex] = []
        err = 0.0
        for r, child, c, d in rung.children:
            if c != 0:
                z = values[child]
                if d is None and self.rungs[child].k >= 0:
                    pole = 1 / (self.arg(child) - 1)
                    err += EPS * abs(c) * (abs(z) + 2 * abs(pole))
                    z = z + pole
                parts.append(c * z)
                err += EPS * (r + 3) * abs(c * z)
            if d is not None:
                parts.append(d)
                err += EPS * (r + 3) * abs(d)
        rem = remainder_T(rung.w, rung.k, replace(self.cfg, tol=local_tol))
        parts.append(rem.value)
        err += rem.err_estimate
        value = -complex(math.fsum(v.real for v in parts), math.fsum(v.imag for v in parts))
        err += EPS * (2 * abs(value) + sum(abs(v) for v in parts))
        return value, err


def _accept(value: complex, err: float, tol: float, s: complex) -> None:
    # tol is absolute for |value| <= 1 and relative above that
    if err > tol * max(1.0, abs(value) - err):
        raise ConvergenceError(
            f"error bound {err:.3g} exceeds tol={tol:g} at s={s} (rounding floor)"
        )


def zeta_star(s, cfg: Optional[LadderConfig] = None, depth: Optional[int] = None) -> EvaluationResult:
    """The entire function zeta(s) - 1/(s-1).

    ``depth`` forces the ladder depth at the top rung; by default it is
    max(0, ceil(base_sigma - Re(s))) and points with Re(s) >= base_sigma go
    straight to the Dirichlet series.
    """
    cfg = cfg or LadderConfig()
    s = as_point(s)
    if depth is not None and depth < 0:
        raise ValueError("depth must be >= 0")
    ev = _Ladder(s, cfg, depth)
    value, err, k = ev.run()
    if ev.rungs[0].k < 0:
        pole = 1 / (s - 1)
        value = value - pole
        err += EPS * (2 * abs(pole) + abs(value))
        _accept(value, err, cfg.tol, s)
        return EvaluationResult(value, "direct", 0, err)
    _accept(value, err, cfg.tol, s)
    return EvaluationResult(value, "ladder", k, err)


def zeta(s, cfg: Optional[LadderConfig] = None, depth: Optional[int] = None) -> EvaluationResult:
    """Riemann zeta at any s with |s - 1| >= cfg.pole_guard."""
    cfg = cfg or LadderConfig()
    s = as_point(s)
    if abs(s - 1) < cfg.pole_guard:
        raise PoleError(f"s={s} is within {cfg.pole_guard:g} of the pole at 1")
    if depth is not None and depth < 0:
        raise ValueError("depth must be >= 0")
    if depth is None and s.real >= cfg.base_sigma:
        value, err, _ = _direct(s, cfg.tol)
        _accept(value, err, cfg.tol, s)
        return EvaluationResult(value, "direct", 0, err)
    star, err, k = _Ladder(s, cfg, depth).run()
    pole = 1 / (s - 1)
    value = star + pole
    err += EPS * (2 * abs(pole) + abs(value))
    # the pole term's own rounding is allowed on top of tol
    _accept(value, err - EPS * 2 * abs(pole), cfg.tol, s)
    return EvaluationResult(value, "ladder", k, err)
