"""Exception hierarchy.

Input problems (malformed data, size mismatches) derive from ``InputError``;
a well-formed object that fails a mathematical precondition (not a
retraction, degenerate, not idempotent ...) raises ``RejectedError``.  The
CLI maps these to exit statuses 2 and 1 respectively.
"""


class MonoRetractError(Exception):
    pass


class InputError(MonoRetractError, ValueError):
    pass


class DomainMismatchError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


class ExponentOverflowError(InputError, OverflowError):
    """Exponent or matrix arithmetic left the signed 64-bit range."""


class CensusTooLargeError(InputError):
    pass


class RejectedError(MonoRetractError, ValueError):
    pass


class NotMonicError(RejectedError):
    pass


class ZeroImageError(RejectedError):
    pass


class NotARetractionError(RejectedError):
    pass


class DegenerateError(RejectedError):
    pass


class NotIdempotentError(RejectedError):
    pass


class NotStandardError(RejectedError):
    pass
