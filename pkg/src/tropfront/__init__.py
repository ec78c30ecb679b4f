"""Exact nondominated sets of discrete multicriteria problems.

The nondominated outcomes of a discrete problem generate a monomial
max-tropical cone; the extremal generators of its complementary
min-tropical cone are the local upper bounds of the search. This package
maintains that pair of descriptions incrementally, drives the search with
two elementary scalarizations, and ships brute-force oracles so every
answer can be verified independently.
"""

from .bounds import check_run, upper_bound
from .bruteforce import (
    CrossCheckReport,
    brute_local_upper_bounds,
    brute_nondominated,
    cross_check,
)
from .cones import (
    ApexSet,
    GeneratorSet,
    InsertionRecord,
    complementary_apices,
    irreducible_components,
    is_extremal_apex,
    is_extremal_inner,
    min_unit,
    new_extremals,
    trivial_generators,
)
from .core import (
    INF,
    NEG_INF,
    Infinity,
    as_scalar,
    cw_min,
    dominates_leq,
    embed_outcome,
    is_finite,
    normalize,
    scalar_shift,
    support,
)
from .scalarize import (
    ExplicitSetOracle,
    Knapsack01Oracle,
    ProblemOracle,
    next_nondominated,
)
from .solver import (
    GeneratorState,
    IterationLimitError,
    RunStats,
    SolveResult,
    run_report,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "NEG_INF",
    "Infinity",
    "as_scalar",
    "is_finite",
    "support",
    "scalar_shift",
    "cw_min",
    "normalize",
    "embed_outcome",
    "dominates_leq",
    "min_unit",
    "trivial_generators",
    "GeneratorSet",
    "ApexSet",
    "InsertionRecord",
    "is_extremal_apex",
    "is_extremal_inner",
    "new_extremals",
    "complementary_apices",
    "irreducible_components",
    "ProblemOracle",
    "ExplicitSetOracle",
    "Knapsack01Oracle",
    "next_nondominated",
    "RunStats",
    "SolveResult",
    "GeneratorState",
    "IterationLimitError",
    "solve",
    "run_report",
    "brute_nondominated",
    "brute_local_upper_bounds",
    "CrossCheckReport",
    "cross_check",
    "upper_bound",
    "check_run",
]
