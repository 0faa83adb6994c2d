"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """Input violates a documented precondition (CLI exit code 2)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (CLI exit code 3)."""
