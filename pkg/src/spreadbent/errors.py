"""Exception types shared by all modules."""


class BentError(ValueError):
    """Base class for every error raised by spreadbent."""


class InvalidModulus(BentError):
    pass


class InvalidArgument(BentError):
    pass


class PreconditionViolation(BentError):
    """Raised when a construction's arithmetic preconditions (gcd tests etc.) fail."""


class InvalidAssignment(BentError):
    pass


class BoundViolation(BentError):
    """Raised when |B| exceeds 2^(n/2), where no bent function can exist."""


class NotBentError(BentError):
    """An input that was required to be bent is not.

    Kept distinct from a ``False`` verdict so callers can tell a failed
    property from a violated precondition.
    """
