"""Shared exception types."""


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""


class DegreeMismatchError(PreconditionError):
    """Objects of different symmetric-group degrees were mixed."""


class InfeasibleError(PreconditionError):
    """A requested witness construction has no solution.

    Carries ``reason``, the violated clause, for reporting.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class BudgetError(RuntimeError):
    """A computation was refused because it exceeds a configured size cap."""
