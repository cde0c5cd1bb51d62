"""Exception types shared by all measures and the command-line tool."""


class FuzzyRankError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(FuzzyRankError, ValueError):
    """Malformed or out-of-range input."""


class UnsupportedInputError(FuzzyRankError, ValueError):
    """Input is well formed but outside the domain of a measure (e.g. ties)."""


class ResourceLimitError(FuzzyRankError, RuntimeError):
    """An exact enumeration would exceed its configured cap."""
