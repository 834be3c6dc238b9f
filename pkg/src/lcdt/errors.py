"""Exception hierarchy.

Every domain error carries a stable ``code`` (its class name) so the CLI can
emit machine-readable error records.
"""


class LcdtError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ParseError(LcdtError, ValueError):
    """Malformed field, element, matrix or coefficient syntax."""


class NonPrimeCharacteristic(LcdtError, ValueError):
    pass


class ReducibleModulus(LcdtError, ValueError):
    pass


class DegreeMismatch(LcdtError, ValueError):
    pass


class MixedFields(LcdtError, TypeError):
    pass


class DivisionByZero(LcdtError, ZeroDivisionError):
    pass


class NoEmbedding(LcdtError, ValueError):
    pass


class RootObstruction(LcdtError, ValueError):
    pass


class NotABasis(LcdtError, ValueError):
    pass


class SingularMatrix(LcdtError, ValueError):
    pass


class NotSquare(LcdtError, ValueError):
    pass


class ZeroOffDiagonal(LcdtError, ValueError):
    pass


class RankDeficientGenerator(LcdtError, ValueError):
    pass


class BudgetExceeded(LcdtError, RuntimeError):
    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class NotAnIsometry(LcdtError, ValueError):
    pass


class LengthTooShort(LcdtError, ValueError):
    pass


class OuterNotLCD(LcdtError, ValueError):
    pass


class NotFound(LcdtError, LookupError):
    pass


class InvariantViolation(LcdtError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
