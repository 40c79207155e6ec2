"""Exception types shared across the package."""


class PellError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PellError, ArithmeticError):
    """Input lies outside the domain of the requested operation."""


class DegenerateParameterError(DomainError):
    """A parametrized family was evaluated where it degenerates.

    `factor` holds a printable description of the vanishing quantity and
    `value` the offending parameter value, when known.
    """

    def __init__(self, message, factor=None, value=None):
        super().__init__(message)
        self.factor = factor
        self.value = value


class PrecisionError(PellError):
    """A truncated Laurent series is too short to decide the result."""


class TruncationError(PellError):
    """An iteration reached its step bound before reaching a conclusion."""


class InvariantError(PellError):
    """An internal consistency check failed; indicates a bug."""


class ParseError(PellError, ValueError):
    """Malformed polynomial text."""
