"""Exact Bernoulli numbers from the generating-function recurrence.

The coefficient of x^N in (e^x - 1) * sum B_n x^n / n! vanishes for N > 1,
which gives

    sum_{n=0}^{N-1} C(N, n) B_n = 0,

and solving for the last term yields B_{N-1}. Convention: B_1 = -1/2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

__all__ = ["BernoulliTable", "bernoulli", "bernoulli_upto"]


@dataclass(frozen=True)
class BernoulliTable:
    values: Tuple[Fraction, ...]

    @property
    def computed_upto(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


# Process-wide memo. Entries are never rewritten once appended.
_TABLE: List[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def _extend(upto: int) -> None:
    with _LOCK:
        for m in range(len(_TABLE), upto + 1):
            # N = m + 1 in the recurrence; every entry below m is known.
            N = m + 1
            acc = Fraction(0)
            for n in range(m):
                b = _TABLE[n]
                if b:
                    acc += comb(N, n) * b
            _TABLE.append(-acc / N)


def bernoulli_upto(N: int) -> BernoulliTable:
    """Return the table B_0..B_N, extending the memo if needed."""
    if isinstance(N, bool) or not isinstance(N, int):
        raise TypeError("N must be an int")
    if N < 0:
        raise ValueError("N must be >= 0")
    if len(_TABLE) <= N:
        _extend(N)
    return BernoulliTable(tuple(_TABLE[: N + 1]))


def bernoulli(n: int) -> Fraction:
    """Exact B_n."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("n must be an int")
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(_TABLE) <= n:
        _extend(n)
    return _TABLE[n]
