"""Exception hierarchy shared across the library."""

from __future__ import annotations


class GolodkitError(Exception):
    """Base class for every error raised by this package."""


class FieldError(GolodkitError):
    """Invalid field construction (non-prime modulus, modulus too large)."""


class ContextMismatchError(GolodkitError):
    """Operands built over different variable contexts or fields."""


class ParseError(GolodkitError):
    """Syntax or vocabulary error in a polynomial expression.

    Carries the 0-based character position of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(GolodkitError):
    """Input violates a documented precondition."""


class NotArtinianError(ValidationError):
    """Quotient is not finite-dimensional; names a witness variable."""

    def __init__(self, variable: str):
        super().__init__(
            f"quotient is not Artinian: no power of variable {variable!r} "
            "lies in the leading-term ideal"
        )
        self.variable = variable


class SessionError(ValidationError):
    """Malformed session file; carries the 1-based source line."""

    def __init__(self, message: str, line: int, column: int | None = None):
        loc = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({loc})")
        self.line = line
        self.column = column


class BudgetExceededError(GolodkitError):
    """A matrix exceeded the configured column cap."""

    def __init__(self, columns: int, cap: int, where: str):
        super().__init__(
            f"matrix with {columns} columns exceeds cap {cap} during {where}"
        )
        self.columns = columns
        self.cap = cap
        self.where = where


class InternalCheckError(GolodkitError):
    """A self-verification (certificate, cross-check) failed."""
