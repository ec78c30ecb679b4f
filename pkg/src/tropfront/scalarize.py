"""Scalarization oracles over finite outcome sets.

Both oracle flavors materialize their outcome set once; afterwards every
query is a pure lookup, so queries are deterministic and can be issued
concurrently. Objective indices are 1-based throughout, matching the
coordinate positions of apex points (coordinate 0 is the homogenizing
coordinate). Ties are always broken toward the lexicographically smallest
outcome vector, which keeps runs reproducible.
"""

from __future__ import annotations

from itertools import product

from .core import INF, Infinity, as_scalar

__all__ = [
    "ProblemOracle",
    "ExplicitSetOracle",
    "Knapsack01Oracle",
    "next_nondominated",
]


class ProblemOracle:
    """A discrete multicriteria problem, seen through its two scalarizations.

    Holds the finite outcome set Z of a problem with ``dim`` objectives and
    answers the epsilon-constraint and hybrid queries below. Subclasses only
    differ in how they materialize Z.
    """

    def __init__(self, dim: int, outcomes):
        if dim < 1:
            raise ValueError("number of objectives must be at least 1")
        cleaned = set()
        for z in outcomes:
            z = tuple(z)
            if len(z) != dim:
                raise ValueError(f"outcome {z!r} does not have {dim} coordinates")
            for v in z:
                if isinstance(v, Infinity):
                    raise ValueError("outcomes must be finite")
            cleaned.add(z)
        self.dim = dim
        self.outcomes = tuple(sorted(cleaned))

    def eps_constraint_min(self, objective: int, strict_bounds=None):
        """Minimize one objective under strict upper bounds on others.

        ``strict_bounds`` maps 1-based objective indices (excluding
        ``objective``) to finite bounds; a feasible outcome must be
        strictly below every bound. Returns the optimal outcome, or None
        when nothing is feasible.
        """
        if not 1 <= objective <= self.dim:
            raise ValueError(f"objective index {objective} out of range")
        bounds = dict(strict_bounds or {})
        for j, bound in bounds.items():
            if not 1 <= j <= self.dim or j == objective:
                raise ValueError(f"bound index {j} invalid for objective {objective}")
            if isinstance(bound, Infinity):
                raise ValueError("bounds must be finite; drop the index instead")
        best = None
        for z in self.outcomes:  # sorted, so the first optimum is lex-smallest
            if any(z[j - 1] >= bound for j, bound in bounds.items()):
                continue
            if best is None or z[objective - 1] < best[objective - 1]:
                best = z
        return best

    def hybrid_min(self, reference):
        """Minimize the coordinate sum below a componentwise cap.

        The optimum is always a nondominated outcome. The cap is expected
        to be an attainable outcome; if it excludes all of Z this raises.
        """
        w = tuple(reference)
        if len(w) != self.dim:
            raise ValueError(f"reference {w!r} does not have {self.dim} coordinates")
        for v in w:
            if isinstance(v, Infinity):
                raise ValueError("reference point must be finite")
        best = None
        best_sum = None
        for z in self.outcomes:
            if all(z[k] <= w[k] for k in range(self.dim)):
                total = sum(z)
                if best is None or total < best_sum:
                    best, best_sum = z, total
        if best is None:
            raise ValueError(f"no outcome lies componentwise below {w!r}")
        return best


class ExplicitSetOracle(ProblemOracle):
    """Oracle over an explicitly listed outcome set."""

    def __init__(self, points, dim=None):
        pts = [tuple(p) for p in points]
        if dim is None:
            if not pts:
                raise ValueError("dim is required for an empty outcome set")
            dim = len(pts[0])
        super().__init__(dim, pts)


class Knapsack01Oracle(ProblemOracle):
    """0/1 knapsack with several linear objectives, all minimized.

    ``profits`` has one row per objective (d x k), ``weights`` one row per
    constraint (r x k), ``capacities`` has length r. The outcome set is
    {P.x + translate : x in {0,1}^k, W.x <= capacities}, materialized by
    full enumeration, which is meant for desk-scale k (about 22 or less).
    """

    def __init__(self, profits, weights, capacities, translate=None):
        P = [[as_scalar(v) for v in row] for row in profits]
        W = [[as_scalar(v) for v in row] for row in weights]
        c = [as_scalar(v) for v in capacities]
        if not P:
            raise ValueError("at least one objective row is required")
        k = len(P[0])
        if any(len(row) != k for row in P):
            raise ValueError("objective rows have mixed lengths")
        if any(len(row) != k for row in W):
            raise ValueError("constraint rows do not match the number of items")
        if len(W) != len(c):
            raise ValueError("number of constraint rows and capacities differ")
        dim = len(P)
        t = [as_scalar(v) for v in translate] if translate is not None else [0] * dim
        if len(t) != dim:
            raise ValueError("translation vector does not match the number of objectives")

        outcomes = []
        for x in product((0, 1), repeat=k):
            if all(
                sum(w_ij * x_j for w_ij, x_j in zip(row, x)) <= cap
                for row, cap in zip(W, c)
            ):
                outcomes.append(
                    tuple(
                        sum(p_ij * x_j for p_ij, x_j in zip(row, x)) + t_i
                        for row, t_i in zip(P, t)
                    )
                )
        super().__init__(dim, outcomes)
        self.items = k
        self.translate = tuple(t)


def next_nondominated(oracle: ProblemOracle, apex):
    """A nondominated outcome strictly below the apex, or None.

    ``apex`` is a normalized min-side point (0th coordinate zero). The
    epsilon-constraint step minimizes the smallest supported objective
    under strict bounds taken from the remaining apex coordinates; since
    that step does not bound the chosen objective itself, a post-check
    rejects optima that escape the open region below the apex. The hybrid
    step then tightens the surviving optimum into a nondominated point.
    Returning None certifies that no nondominated outcome lies strictly
    below the apex.
    """
    a = tuple(apex)
    d = oracle.dim
    if len(a) != d + 1:
        raise ValueError(f"apex {a!r} does not have {d + 1} coordinates")
    if a[0] != 0:
        raise ValueError(f"apex {a!r} must be normalized (0th coordinate 0)")
    for v in a:
        if isinstance(v, Infinity) and v.sign < 0:
            raise ValueError(f"apex {a!r} contains NEG_INF")
    sup = [j for j in range(1, d + 1) if a[j] != INF]
    objective = sup[0] if sup else 1
    bounds = {j: a[j] for j in sup if j != objective}
    w = oracle.eps_constraint_min(objective, bounds)
    if w is None:
        return None
    if a[objective] != INF and w[objective - 1] >= a[objective]:
        return None
    return oracle.hybrid_min(w)
