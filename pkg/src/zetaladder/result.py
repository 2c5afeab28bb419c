from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError

# Complex arguments are plain Python complex numbers (IEEE doubles).
ComplexPoint = complex

METHODS = ("direct", "ladder", "exact", "hasse")

EPS = 2.0**-52


@dataclass(frozen=True)
class EvaluationResult:
    value: complex
    method: str
    depth_k: int
    err_estimate: float


def as_point(s) -> complex:
    """Coerce ``s`` to a finite complex number."""
    try:
        z = complex(s)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a complex number: {s!r}") from exc
    if not cmath.isfinite(z):
        raise DomainError(f"argument must be finite, got {z!r}")
    return z
