"""Exception types shared across the package."""


class PrtailError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(PrtailError, ValueError):
    """A parameter is outside its documented domain."""


class ParseError(PrtailError, ValueError):
    """An input file could not be parsed.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class StateError(PrtailError, RuntimeError):
    """An operation was applied to an object in an unusable state."""


class DegenerateFitError(PrtailError, ValueError):
    """A tail fit has no information content (zero log-sum)."""


class NumericError(PrtailError, RuntimeError):
    """A numeric procedure failed to converge."""
