"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class EvaluationError(ArithmeticError):
    """The integrand returned a non-finite value at a quadrature node."""

    def __init__(self, message, *, interval=None, node=None):
        super().__init__(message)
        self.interval = interval
        self.node = node


class OracleError(RuntimeError):
    """The adaptive reference integrator ran out of refinement budget."""
