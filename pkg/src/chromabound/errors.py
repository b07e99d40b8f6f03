"""Exception types shared across the toolkit."""

from __future__ import annotations


class InvalidInstanceError(ValueError):
    """Raw instance data violates the format contract.

    Carries the full violation list so callers can report every problem
    at once instead of failing on the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class BudgetExceededError(RuntimeError):
    """An exact computation could not finish within its search budget."""


class RestartsExhaustedError(RuntimeError):
    """A Las Vegas routine used up its restart budget without success.

    The attempt count and per-attempt statistics ride along so failures
    are reported, never silently looped.
    """

    def __init__(self, message, attempts, stats=None):
        super().__init__(message)
        self.attempts = attempts
        self.stats = dict(stats or {})
