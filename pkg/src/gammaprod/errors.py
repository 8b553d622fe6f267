"""Exception types raised across the package."""


class GammaprodError(Exception):
    """Base class for all errors raised by gammaprod."""


class PoleError(GammaprodError, ValueError):
    """Argument sits on a pole of the gamma function (0, -1, -2, ...)."""


class DomainError(GammaprodError, ValueError):
    """Argument outside the domain an operation accepts."""


class PreconditionError(GammaprodError, ValueError):
    """Inputs violate a documented precondition."""


class ConvergenceError(GammaprodError, RuntimeError):
    """An iterative or adaptive procedure failed to converge."""


class BudgetExceededError(ConvergenceError):
    """An adaptive procedure would need more work than its configured cap."""


class IdentityCheckError(GammaprodError, ArithmeticError):
    """Two routes to the same quantity disagree beyond tolerance."""
