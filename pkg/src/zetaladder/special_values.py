"""Exact values of zeta at the non-positive integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import bernoulli

__all__ = ["SpecialValue", "special_value", "zeta_neg_int"]


@dataclass(frozen=True)
class SpecialValue:
    k: int
    value: Fraction


def zeta_neg_int(k: int) -> Fraction:
    """zeta(-k) as an exact rational.

    zeta(-k) = -B_{k+1}/(k+1) for k >= 1; k = 0 is the one exception and
    is -1/2.
    """
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("k must be an int")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(-1, 2)
    return -bernoulli(k + 1) / (k + 1)


def special_value(k: int) -> SpecialValue:
    return SpecialValue(k, zeta_neg_int(k))
