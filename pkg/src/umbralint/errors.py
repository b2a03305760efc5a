"""Exception hierarchy shared by every layer of the package."""


class UmbralError(Exception):
    """Base class for all errors raised by umbralint."""


class PoleError(UmbralError, ValueError):
    """Argument sits on a pole of the Gamma function (a nonpositive integer)."""


class TruncationError(UmbralError, ArithmeticError):
    """A series did not meet its tolerance within ``max_terms`` terms."""


class NonFiniteError(UmbralError, ArithmeticError):
    """An evaluation produced NaN or infinity."""


class DomainError(UmbralError, ValueError):
    """Parameters fall outside the region where a closed form holds."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations) or [message]


class IntegerOrderError(DomainError):
    """A noninteger-order formula was asked for an integer order."""


class ResidualError(UmbralError, ArithmeticError):
    """A value that must be real carries a non-negligible imaginary part."""


class ConvergenceError(UmbralError, ArithmeticError):
    """The quadrature oracle failed to converge."""


class UnsupportedError(UmbralError):
    """The oracle cannot build an integrand for this invocation."""


class ParseError(UmbralError, ValueError):
    """Malformed expression text."""

    def __init__(self, message, position=0, expected=()):
        self.position = position
        self.expected = sorted(set(expected))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class NoMatchError(UmbralError, ValueError):
    """No integral family template matches the parsed integrand."""
