"""Exception types shared across the package."""


class TakasymError(Exception):
    """Base class for domain errors raised by this package."""


class BudgetExceededError(TakasymError):
    """A work budget (memo entries, term count) was exhausted."""

    def __init__(self, message: str, completed: int | None = None):
        super().__init__(message)
        self.completed = completed


class TailBoundError(TakasymError):
    """A rigorous tail estimate could not be pushed below the target."""


class StructureFalsifiedError(TakasymError):
    """Data contradicts a conjectured structural form.

    This is a finding, not a bug: the offending index and the first
    mismatch are reported verbatim so the failure can be inspected.
    """


class InsufficientDepthError(TakasymError):
    """A table was not computed deep enough; names the required depth."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class PrecisionStarvationError(TakasymError):
    """Requested accuracy exceeds what the working precision supports."""


class BranchTrackingError(TakasymError):
    """Continuity tracking of a complex logarithm branch failed."""
