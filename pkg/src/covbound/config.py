"""Runtime configuration: work budget and oracle caps.

The budget counts elementary operations (distance evaluations, table
lookups) an exhaustive routine is allowed to perform.  ``COVBOUND_BUDGET``
in the environment overrides the default.
"""
import os
from contextlib import contextmanager

from .exceptions import BudgetExceeded

DEFAULT_BUDGET = 2 ** 26
DEFAULT_ORACLE_CAP = 3 ** 6
MAX_FIELD_ORDER = 256

_override = []


def get_budget(budget=None):
    """Resolve the effective budget: explicit argument, context, env, default."""
    if budget is not None:
        return int(budget)
    if _override:
        return _override[-1]
    env = os.environ.get("COVBOUND_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@contextmanager
def budget_limit(budget):
    """Temporarily set the work budget for everything inside the block."""
    _override.append(int(budget))
    try:
        yield
    finally:
        _override.pop()


def check_budget(needed, budget=None, what="computation"):
    limit = get_budget(budget)
    if needed > limit:
        raise BudgetExceeded(needed, limit, what)
    return limit
