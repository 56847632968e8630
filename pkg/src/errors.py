"""Exception hierarchy shared by every layer of the package.

Errors fall into three families that the command layer maps to exit codes:

- ``DataError``: the input files are unreadable, malformed or inconsistent (exit 3)
- ``ParameterError``: a caller asked for something the estimator cannot do (exit 2)
- ``NumericError``: a linear algebra step failed or lost accuracy (exit 4)

Data and parameter errors also derive from ``ValueError`` so callers that only
care about "bad value" can keep catching that.
"""

from __future__ import annotations


class AnieError(Exception):
    """Base class for all package errors."""

    exit_code: int = 1


# ============================================================================
# Data errors
# ============================================================================


class DataError(AnieError, ValueError):
    """Input data could not be read or violates the event model."""

    exit_code = 3


class ParseError(DataError):
    """A row of an edge-list file could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class EventValidationError(DataError):
    """An event references an invalid node id or timestamp."""


class DegenerateHorizonError(DataError):
    """A stream with events has a zero-length observation horizon."""


class SchemaError(DataError):
    """A JSON document does not match its published schema."""


# ============================================================================
# Parameter errors
# ============================================================================


class ParameterError(AnieError, ValueError):
    """An argument is outside the range an operation accepts."""

    exit_code = 2


class RankError(ParameterError):
    """Requested subspace rank exceeds the number of nodes."""


class ShapeError(ParameterError):
    """Array or matrix dimensions do not agree."""


class DomainError(ParameterError):
    """A time point lies outside the unit interval."""


class UnsupportedBasisError(ParameterError):
    """The operation requires the Haar family."""


class BoundViolationError(ParameterError):
    """An intensity exceeded the bound supplied to the thinning sampler."""


# ============================================================================
# Numeric errors
# ============================================================================


class NumericError(AnieError, ArithmeticError):
    """A numerical routine failed or produced an inaccurate result."""

    exit_code = 4


class IllConditionedBasisError(NumericError):
    """The Gram matrix of a raw basis family is singular or ill-conditioned."""

    def __init__(self, message: str, smallest_eigenvalue: float) -> None:
        self.smallest_eigenvalue = smallest_eigenvalue
        super().__init__(f"{message} (smallest eigenvalue {smallest_eigenvalue:.3e})")


class ConvergenceError(NumericError):
    """The iterative singular value solver did not converge."""

    def __init__(self, message: str, iterations: int | None = None, converged: int = 0) -> None:
        self.iterations = iterations
        self.converged = converged
        super().__init__(
            f"{message} (max iterations {iterations}, converged vectors {converged})"
        )
