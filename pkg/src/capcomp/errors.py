"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured size budget."""


class NoWitnessError(ValueError):
    """Raised when an adversarial sequence is requested for a feasible setup."""
