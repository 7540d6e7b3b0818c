"""Exception hierarchy shared by every module."""


class BurauError(Exception):
    """Base class for all errors raised by realburau."""


class PreconditionError(BurauError, ValueError):
    """An operation was called outside its domain (bad input)."""


class WordSyntaxError(PreconditionError):
    """A braid word failed to parse."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class IncompatibleFieldError(PreconditionError):
    """Quadratic numbers from different fields Q(sqrt d) were combined."""


class ZeroSpecializationError(PreconditionError):
    """t = 0 is not a valid specialization: det rho(sigma_i) = -t."""


class InvariantError(BurauError, RuntimeError):
    """A computed certificate contradicted a mathematical invariant."""
