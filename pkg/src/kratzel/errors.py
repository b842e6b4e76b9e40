"""Exception types shared by the numerical modules."""


class DomainError(ValueError):
    """An argument lies outside the set where the function is defined."""


class AccuracyError(ArithmeticError):
    """Quadrature did not reach the requested tolerance.

    The best available estimate is kept on the exception so callers can
    decide whether it is still usable.
    """

    def __init__(self, message, value=float("nan"), err_estimate=float("inf"), n_evals=0):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate
        self.n_evals = n_evals
