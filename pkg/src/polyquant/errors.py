"""Exception types shared across the package."""


class PolyquantError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PolyquantError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class UnsupportedOrderError(PolyquantError, ValueError):
    """A closed form was requested for an order that has none."""


class AccuracyError(PolyquantError, ArithmeticError):
    """The requested tolerance could not be met.

    Carries ``value`` (the best available estimate) and ``est_error``
    (an estimate of its absolute error).
    """

    def __init__(self, message, value=None, est_error=None):
        super().__init__(message)
        self.value = value
        self.est_error = est_error


class BracketError(PolyquantError, ValueError):
    """The supplied interval does not bracket a root."""


class ConvergenceError(PolyquantError, ArithmeticError):
    """An iteration exhausted its budget without converging."""


class QuadratureError(PolyquantError, ArithmeticError):
    """Base for quadrature failures; carries the last estimate."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class QuadratureDivergenceError(QuadratureError):
    """Successive refinement levels grew instead of contracting."""


class QuadratureAccuracyError(QuadratureError):
    """Refinement levels were exhausted before reaching the tolerance."""


class DegenerateDataError(PolyquantError, ValueError):
    """Input data carries no usable signal (e.g. zero variance)."""
