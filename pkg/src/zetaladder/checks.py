"""Consistency suites shared by ``zetaladder check`` and the test-suite."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional

from .errors import ZetaError
from .ladder import LadderConfig, default_depth, zeta
from .oracle import zeta_hasse
from .special_values import zeta_neg_int

__all__ = [
    "SuiteResult",
    "cross_depth",
    "exact_agreement",
    "oracle_agreement",
    "small_grid",
    "standard_grid",
]


def standard_grid() -> List[complex]:
    """200 points: Re in -6..3.5 (step 0.5) by Im in +-0.5..+-4.5 (step 1).

    Every point is at least 0.5 from s = 1 and the grid is closed under
    conjugation.
    """
    res = [-6.0 + 0.5 * i for i in range(20)]
    ims = [-4.5 + j for j in range(10)]
    pts = [complex(x, y) for x in res for y in ims]
    return [s for s in pts if abs(s - 1) >= 0.5]


def small_grid() -> List[complex]:
    return standard_grid()[::10]


@dataclass
class SuiteResult:
    name: str
    max_err: float
    worst: Optional[complex]
    count: int
    tol: float
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None and self.max_err <= self.tol


def _run(name: str, items: Iterable, err_of: Callable, tol: float) -> SuiteResult:
    max_err, worst, count = 0.0, None, 0
    for item in items:
        try:
            err = err_of(item)
        except ZetaError as exc:
            return SuiteResult(name, math.inf, item, count, tol, f"{exc.kind}: {exc}")
        count += 1
        if not err <= max_err:
            max_err, worst = err, item
    return SuiteResult(name, max_err, worst, count, tol)


def oracle_agreement(points: Iterable[complex], tol: float = 1e-8, cfg: Optional[LadderConfig] = None) -> SuiteResult:
    """max |zeta - zeta_hasse| over ``points``."""
    cfg = cfg or LadderConfig()
    return _run(
        "ladder-vs-oracle",
        points,
        lambda s: abs(zeta(s, cfg).value - zeta_hasse(s, min(cfg.tol, 1e-12)).value),
        tol,
    )


def exact_agreement(ks: Iterable[int] = range(11), tol: float = 1e-9, cfg: Optional[LadderConfig] = None) -> SuiteResult:
    """max |zeta(-k) - zeta_neg_int(k)| over ``ks``."""
    cfg = cfg or LadderConfig()
    return _run(
        "ladder-vs-exact",
        ks,
        lambda k: abs(zeta(-k, cfg).value - float(zeta_neg_int(k))),
        tol,
    )


def cross_depth(points: Iterable[complex], tol: float = 1e-9, cfg: Optional[LadderConfig] = None, extra: int = 2) -> SuiteResult:
    """max difference between forced depths k and k + extra at each point."""
    cfg = cfg or LadderConfig()

    def diff(s: complex) -> float:
        k = default_depth(s, cfg.base_sigma)
        return abs(zeta(s, cfg, depth=k).value - zeta(s, cfg, depth=k + extra).value)

    return _run("cross-depth", points, diff, tol)
