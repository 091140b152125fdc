"""Exception hierarchy."""
from __future__ import annotations


class VecMeasureError(Exception):
    pass


class NegativeTermError(VecMeasureError, ValueError):
    """A nonnegative summation received a negative term."""


class DivergentSeriesError(VecMeasureError, ArithmeticError):
    """A signed series is not absolutely convergent."""


class DimensionMismatchError(VecMeasureError, ValueError):
    pass


class MixedSpaceError(VecMeasureError, ValueError):
    pass


class TooManyTermsError(VecMeasureError, ValueError):
    pass


class TooLargeError(VecMeasureError, ValueError):
    pass


class NotLocallyDeterminedError(VecMeasureError):
    pass


class NotInSigmaFError(VecMeasureError, ValueError):
    pass


class IntegrabilityError(VecMeasureError):
    """Base for integrability failures; ``value`` carries the witness."""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class NotBochnerIntegrableError(IntegrabilityError):
    pass


class NotDunfordError(IntegrabilityError):
    pass


class NotPettisError(IntegrabilityError):
    pass


class NotLocallyPettisError(IntegrabilityError):
    pass


class NotLocallyBochnerError(IntegrabilityError):
    pass


class NotNuIntegrableError(IntegrabilityError):
    pass


class InconsistencyError(VecMeasureError, AssertionError):
    """Two independent computations of the same quantity disagreed."""


class ScenarioError(VecMeasureError):
    pass


class ParseError(ScenarioError):
    pass


class ValidationError(ScenarioError):
    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field
