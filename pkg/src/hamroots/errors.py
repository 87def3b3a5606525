"""Exception types shared across the package."""


class CapabilityError(RuntimeError):
    """Raised when a request exceeds a configured desk-scale limit.

    Carries an optional partial result so callers can salvage whatever
    was computed before the limit was hit.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InvariantViolation(RuntimeError):
    """A cross-checked mathematical invariant failed; results are suspect."""
