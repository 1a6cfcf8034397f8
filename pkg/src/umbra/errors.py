"""Exception hierarchy shared by every module."""


class UmbraError(Exception):
    """Base class for all library errors."""


class DomainError(UmbraError, ValueError):
    """An argument lies outside the domain of the operation (negative n, m > n, ...)."""


class OrderError(UmbraError, ValueError):
    """A series has the wrong order (not invertible, not a delta series)."""


class CompositionError(UmbraError, ValueError):
    """Substitution of a series with a nonzero constant term."""


class TruncationError(UmbraError, ValueError):
    """A series is truncated too early for the requested exact result."""
