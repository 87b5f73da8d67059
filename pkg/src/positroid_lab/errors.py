"""Exception types shared across the package.

The CLI maps each class to a distinct exit status.
"""


class PositroidError(Exception):
    """Base class for all errors raised by positroid_lab."""


class ParseError(PositroidError, ValueError):
    """Input text could not be read as the requested object."""


class InvariantError(PositroidError, ValueError):
    """An object violates a structural invariant (bad interval, non-necklace, ...)."""


class GuardError(PositroidError, ValueError):
    """An exhaustive computation was requested beyond its size guard."""
