"""Exceptions raised by the evaluators."""


class ZetaError(ValueError):
    """Base class for evaluation failures."""

    kind = "error"


class DomainError(ZetaError):
    """Argument outside the contract of the called routine."""

    kind = "domain"


class PoleError(DomainError):
    """Argument too close to the pole at s = 1."""

    kind = "pole"


class ConvergenceError(ZetaError):
    """Truncation rule could not be met within the term budget."""

    kind = "convergence"
