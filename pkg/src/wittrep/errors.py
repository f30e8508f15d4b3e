"""Exception hierarchy shared by all modules."""


class WittRepError(Exception):
    """Base class for library errors."""


class DomainError(WittRepError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(WittRepError, ValueError):
    """A documented precondition does not hold."""


class CapExceeded(WittRepError):
    """An enumeration would exceed the configured size cap."""


class TruncationOverflow(WittRepError):
    """A result would contain terms above the truncation degree."""

    def __init__(self, degree, limit):
        super().__init__(f"term of degree {degree} exceeds truncation degree {limit}")
        self.degree = degree
        self.limit = limit


class InvariantViolation(WittRepError, AssertionError):
    """An internal cross-check between two computations failed."""
