"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class PrecisionError(WorkbenchError):
    """The answer depends on power-series coefficients beyond the stored precision.

    Raised instead of guessing: callers may retry with a larger precision.
    The optional ``needed`` attribute carries a sufficient precision when one
    can be derived from the failing computation.
    """

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class NotDivisibleError(WorkbenchError, ArithmeticError):
    """Exact division was requested but the divisor does not divide the dividend."""


class ValidationError(WorkbenchError, ValueError):
    """Structured input (algebra tables, extensions, JSON requests) failed a check.

    ``path`` locates the offending field when the error comes from parsing.
    """

    def __init__(self, message, path=None):
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path
