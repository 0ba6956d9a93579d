"""Exception types shared across the package."""


class UsageError(ValueError):
    """Invalid arguments: degree mismatch, bad passport, malformed cycle string."""


class CapabilityError(ValueError):
    """Request exceeds what brute force can handle (degree above the cap)."""


class DomainError(ValueError):
    """Analytic parameter outside the domain of a family."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed. Indicates a bug, never bad input."""


class ClosureError(RuntimeError):
    """A cactus set is not closed under wall crossing."""

    def __init__(self, message, missing=None):
        super().__init__(message)
        self.missing = missing


class VerificationFailure(RuntimeError):
    """A numeric or combinatorial check did not hold."""
