"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoSignChangeError(ValueError):
    """The function does not change sign across the supplied bracket."""


class ConvergenceError(RuntimeError):
    """An iterative method ran out of iterations before meeting its tolerance."""


class EnumerationBudgetError(RuntimeError):
    """A lattice enumeration would visit more sites than allowed."""


class RangeError(OverflowError):
    """A result falls outside double range; its natural log is still known.

    The log value is kept on ``log_value`` so callers can report it.
    """

    def __init__(self, message, log_value):
        super().__init__(message)
        self.log_value = log_value
