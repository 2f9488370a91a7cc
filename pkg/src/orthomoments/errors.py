"""Exception hierarchy for orthomoments."""


class OrthoMomentsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidExponent(OrthoMomentsError, ValueError):
    pass


class ShapeError(OrthoMomentsError, ValueError):
    pass


class IndexOutOfRange(OrthoMomentsError, ValueError):
    pass


class RowSumMismatch(OrthoMomentsError, ValueError):
    pass


class GuardExceeded(OrthoMomentsError, RuntimeError):
    """The requested integral is larger than the configured guards allow."""


class DivisionByZero(OrthoMomentsError, ZeroDivisionError):
    pass


class PoleAtN(OrthoMomentsError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class DimensionTooSmall(OrthoMomentsError, ValueError):
    pass


class ParseError(OrthoMomentsError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
