"""Exception and warning types raised by degentrig."""


class DegenTrigError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DegenTrigError, ValueError):
    """Parameters fall outside the real branch (lambda == 0, 1 + lambda*a <= 0, ...)."""


class PoleError(DegenTrigError, ZeroDivisionError):
    """A quotient function was evaluated where its denominator is exactly zero."""


class ParamError(DegenTrigError, ValueError):
    """An identity was run without one of its integer parameters."""


class EmptyGridError(DegenTrigError, ValueError):
    """Pole filtering left no admissible sample point."""


class OrderMismatchError(DegenTrigError, ValueError):
    """Two formal series of different truncation order were combined."""


class NonInvertibleError(DegenTrigError, ZeroDivisionError):
    """Division by a formal series whose constant term is zero."""


class NotExactCapableError(DegenTrigError, ValueError):
    """The identity involves pi-dependent constants and has no exact series check."""


class ConvergenceWarning(UserWarning):
    """Series evaluated outside its guaranteed radius of convergence."""
