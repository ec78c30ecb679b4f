"""Cyclic-polytope facet bound and the counting checks for finished runs."""

from __future__ import annotations

import logging
import math

__all__ = ["upper_bound", "check_run"]

logger = logging.getLogger(__name__)


def _choose(n: int, r: int) -> int:
    # zero for a negative lower index and whenever n < r (incl. negative n)
    if r < 0 or n < 0:
        return 0
    return math.comb(n, r)


def upper_bound(m: int, k: int) -> int:
    """Facet count U(m, k) of a cyclic k-polytope with m vertices.

    This bounds the number of extreme generators of a cone in k dimensions
    cut out by m halfspaces, tropical cones included (with m counting the
    halfspaces plus the k implicit nonnegativity constraints).
    """
    if m < 0 or k < 0:
        raise ValueError("arguments must be nonnegative integers")
    half_up = (k + 1) // 2
    half_down = k // 2
    return _choose(m - half_up, half_down) + _choose(m - half_down - 1, half_up - 1)


def check_run(stats, dim: int) -> bool:
    """Counting verdict for a finished run: the number m of nontrivial
    local upper bounds obeys m <= U(n + d, d), and the run spent exactly
    n + m scalarizations.

    Whether the d trivial generators should be charged against the bound as
    well is ambiguous, so the all-generator form is logged but never part
    of the verdict.
    """
    bound = upper_bound(stats.n + dim, dim)
    logger.debug(
        "all-generator count m+d=%d against U(n+d,d)=%d", stats.m + dim, bound
    )
    return stats.m <= bound and stats.scalarization_calls == stats.n + stats.m
