"""Typed errors shared by every module."""


class TroposError(Exception):
    """Base class for all library errors."""


class SemiringMismatchError(TroposError):
    """A value is outside a semiring's carrier, or operands mix semirings."""


class CapabilityError(TroposError):
    """The semiring lacks a required capability (idempotent, semifield, radicable)."""


class NoInverseError(TroposError):
    """Multiplicative inverse requested for the semiring zero."""


class ShapeMismatchError(TroposError):
    """Matrix or grid-function shapes do not line up."""


class DomainError(TroposError):
    """An argument lies outside the mathematical domain of an operation."""


class NoCycleError(TroposError):
    """Cycle-mean eigenvalue is undefined: the matrix has no cycle."""


class DivergenceError(TroposError):
    """An iteration failed to stabilize within its iteration budget.

    Carries the last iterate for diagnosis and, for interval solves, the
    name of the endpoint system that diverged.
    """

    def __init__(self, message, last_iterate=None, endpoint=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.endpoint = endpoint


class ParseError(TroposError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VerificationError(TroposError):
    """Cross-check between two solution methods failed."""
