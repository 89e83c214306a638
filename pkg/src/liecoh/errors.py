"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Input data is malformed or violates a stated precondition."""


class AmbientMismatch(InvalidInput):
    pass


class NotAnIdeal(InvalidInput):
    pass


class NotClosed(InvalidInput):
    """Subspace is not closed under the bracket."""


class DegreeOutOfRange(InvalidInput):
    pass


class NotACocycle(InvalidInput):
    pass


class ContractViolation(AssertionError):
    """A mathematically guaranteed fact failed to hold.

    Raised only when the input passed validation; it always indicates a bug
    in this package (or corrupted input that slipped past validation).
    """
