"""Exception types shared across the package."""

from __future__ import annotations


class SROError(ValueError):
    """Base class for domain errors (bad parameters, failed preconditions)."""


class GraphFormatError(SROError):
    """Malformed graph6 or edge-list input."""


class ConditionError(SROError):
    """A target number fails the necessary condition for realizability."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotEquitableError(SROError):
    """A vertex partition is not equitable.

    ``vertex`` and ``block`` identify the first row whose neighbour count into
    ``block`` differs from the rest of its own block.
    """

    def __init__(self, message: str, vertex: int | None = None, block: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.block = block


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver hit its sweep cap."""
