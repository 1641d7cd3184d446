"""Exception hierarchy. Everything raised on bad input derives from MihailovaError."""


class MihailovaError(ValueError):
    pass


class MalformedWordError(MihailovaError):
    """A letter index outside ``1..rank`` or an unparseable token."""


class RankMismatchError(MihailovaError):
    pass


class ShapeError(MihailovaError):
    """Wrong generator count, matrix size, or an inexpressible witness image."""


class CapabilityError(MihailovaError):
    """The quotient oracle does not support the requested test."""


class NotAMemberError(MihailovaError):
    pass


class DomainError(MihailovaError):
    """A matrix that should be unimodular is not."""


class UnsupportedInputError(MihailovaError):
    pass


class NotFoundWithinBound(MihailovaError):
    """A bounded search gave up. This is *not* a proof of absence."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class InvariantViolation(AssertionError):
    """An internal consistency check failed (indicates a bug or a bad oracle)."""
