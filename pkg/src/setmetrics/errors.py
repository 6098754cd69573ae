"""Exception types shared across the package."""


class SetMetricsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SetMetricsError, ValueError):
    """An input fails a structural precondition (bad element, bad matrix,
    mismatched spaces, invalid injection, inadmissible penalty)."""


class DomainError(SetMetricsError, ValueError):
    """The requested quantity is undefined for the given input, e.g. a
    comparison distance on an empty set."""


class SizeLimitError(SetMetricsError, ValueError):
    """A brute-force enumeration was requested above its instance-size cap."""


class ParseError(SetMetricsError, ValueError):
    """A workspace document is malformed: invalid JSON, wrong structure,
    unknown keys, or references to undefined names."""
