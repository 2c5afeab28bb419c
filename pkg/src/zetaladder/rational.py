"""Exact rationals and their canonical text form.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it is used directly as the rational carrier.
"""

from __future__ import annotations

import re
from fractions import Fraction

BigRational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(q: Fraction, machine: bool = True) -> str:
    """Render ``q`` as ``p/q`` text.

    Zero is always ``"0"``. Integers are ``"p/1"`` in machine formats and
    plain ``"p"`` in human-readable output.
    """
    q = Fraction(q)
    if q == 0:
        return "0"
    if q.denominator == 1 and not machine:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)
