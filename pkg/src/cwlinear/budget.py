"""Cooperative step budgets so long computations can be time-boxed."""
from __future__ import annotations


class BudgetExceeded(RuntimeError):
    pass


class Budget:
    """Counts work steps; ``limit=None`` means unbounded."""

    def __init__(self, limit=None):
        self.limit = limit
        self.used = 0

    def tick(self, steps: int = 1):
        self.used += steps
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"step budget of {self.limit} exhausted")


UNLIMITED = None


def as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
