"""Exception types shared across the package."""


class BoundExceededError(ValueError):
    """An enumeration or subgroup size exceeds the configured desk-scale bound."""


class InvariantViolation(ArithmeticError):
    """A structural identity that must hold (e.g. integrality of a structure
    constant) failed.  Carries a reproducer dict for bug reports."""

    def __init__(self, message: str, reproducer: dict | None = None):
        super().__init__(message)
        self.reproducer = reproducer or {}
