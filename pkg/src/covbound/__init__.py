"""Covering codes, list-decoding bounds and exact small-code computations.

Submodules
----------
algebra
    GF(q) arithmetic and linear algebra.
codes, codefile
    Code representations, distances, weights and the plain-text code format.
families
    Standard code constructions with self-checks.
covering
    Covering radius, greedy covering search and quoted covering tables.
bounds
    Upper bounds on code size, length and distance, and the bound ladder.
listdecode, insdel, lrc
    List sizes, insertion-deletion distance and locality.
oracle
    Exact ``A_q(n,d)`` and ``K_q(n,R)`` by branch and bound.
"""
from .algebra import Field, field_make
from .bounds import BoundResult, CodeParams, bound_ladder
from .codes import Code, LinearCode, dual, min_distance, weight_distribution
from .config import budget_limit, get_budget
from .covering import covering_radius, delsarte_bound, greedy_covering_search
from .exceptions import BudgetExceeded, CovboundError
from .families import FamilySpec, construct

__version__ = "0.1.0"

__all__ = [
    "BoundResult", "BudgetExceeded", "Code", "CodeParams", "CovboundError", "FamilySpec",
    "Field", "LinearCode", "bound_ladder", "budget_limit", "construct", "covering_radius",
    "delsarte_bound", "dual", "field_make", "get_budget", "greedy_covering_search",
    "min_distance", "weight_distribution",
]
