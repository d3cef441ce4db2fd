"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: parse errors exit 1,
validation errors exit 2.  Verification failures are not exceptions; they
are reported through certificates.
"""


class PreordError(Exception):
    """Base class for package errors."""


class DimensionError(PreordError):
    """Shape mismatch in exact matrix or vector arithmetic."""


class ValidationError(PreordError):
    """Rejected object or morphism data.

    Carries an optional witness (the offending generator, relation row,
    table cell, ...) so callers can report exactly what failed.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(PreordError):
    """A search exceeded its configured state budget."""


class ParseError(PreordError):
    """Workspace file rejected; carries the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
