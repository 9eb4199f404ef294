"""Exception hierarchy with stable machine-readable codes.

Every error raised by the library carries a ``code`` string that the CLI
echoes in diagnostics, so scripted callers can dispatch on it without
parsing messages.
"""

from __future__ import annotations


class HoloboundError(Exception):
    """Base class for all library errors."""

    code = "ERROR"


class BadParameterError(HoloboundError):
    code = "BAD_PARAMETER"


class OutsideDomainError(HoloboundError):
    code = "OUTSIDE_DOMAIN"


class NoConvergenceError(HoloboundError):
    code = "NO_CONVERGENCE"


class SegmentExitsDomainError(HoloboundError):
    code = "SEGMENT_EXITS_DOMAIN"


class NoHalflineError(HoloboundError):
    code = "NO_HALFLINE"


class UnboundedDomainError(HoloboundError):
    code = "UNBOUNDED_DOMAIN"


class TolTooTightError(HoloboundError):
    code = "TOL_TOO_TIGHT"


class OrderViolationError(HoloboundError):
    code = "ORDER_VIOLATION"


class UnboundedInputError(HoloboundError):
    code = "UNBOUNDED_INPUT"


class SupInfiniteError(HoloboundError):
    code = "SUP_INFINITE"


class ConfigError(HoloboundError):
    code = "CONFIG_INVALID"


class MissingDataError(HoloboundError):
    code = "MISSING_DATA"
