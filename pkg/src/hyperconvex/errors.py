"""Exception types.

Everything derives from ValueError so callers that only care about
"bad input vs. bug" can catch one class.
"""

from __future__ import annotations


class HyperconvexError(ValueError):
    pass


class DimensionMismatchError(HyperconvexError):
    """Operands live in different ambient spaces."""


class SchemaError(HyperconvexError):
    """A JSON document does not match the set/report schema."""


class EmptyIntersectionError(HyperconvexError):
    """Certified empty intersection where a point was required."""


class ChartDomainError(HyperconvexError):
    """Input lies outside the domain of the requested chart."""


class ConvergenceError(HyperconvexError):
    """An iterative solver hit its cap before meeting its certificate.

    Carries the best iterate and a residual bound so callers can decide
    whether the partial answer is still usable.
    """

    def __init__(self, message: str, best=None, residual: float | None = None):
        super().__init__(message)
        self.best = best
        self.residual = residual
