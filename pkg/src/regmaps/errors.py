"""Exception types shared across the package.

Every error that the command line front end turns into an exit status
lives here, so library code never has to import from the CLI layer.
"""

from __future__ import annotations


class RegmapsError(Exception):
    """Base class for all package errors."""


class ContractViolation(RegmapsError):
    """An operation was called with inputs that break its preconditions."""


class ResourceLimitExceeded(RegmapsError):
    """A configured bound (closure size, coset count, census order) was hit.

    The message names the limit that was exceeded so callers can adjust it.
    """

    def __init__(self, message: str, limit_name: str, limit_value: int):
        super().__init__(message)
        self.limit_name = limit_name
        self.limit_value = limit_value


class ParseError(RegmapsError):
    """Syntax or semantic error in a group file, with source location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class TheoremViolation(RegmapsError):
    """Computed data contradicts a structural fact that is provably true.

    Reaching this means the implementation (or the input transcription)
    is wrong, never the mathematics, so tests treat it as a hard failure.
    """


class ClassificationError(TheoremViolation):
    """A quotient map did not match the structure the classifier expected."""
