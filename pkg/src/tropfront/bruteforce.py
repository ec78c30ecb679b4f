"""Brute-force reference oracles.

Deliberately naive implementations used to cross-validate the cone-based
solver; nothing here shares code with the solver path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import INF
from .scalarize import ExplicitSetOracle
from .solver import solve

__all__ = [
    "brute_nondominated",
    "brute_local_upper_bounds",
    "CrossCheckReport",
    "cross_check",
]


def brute_nondominated(points) -> set:
    """All points of the cloud not weakly dominated by a distinct point.

    Pairwise scan. Duplicates are removed first; a dominating point is
    lexicographically smaller, so only the sorted prefix is scanned.
    """
    pts = sorted({tuple(p) for p in points})
    out = set()
    for idx, z in enumerate(pts):
        dominated = False
        for w in pts[:idx]:
            if all(wi <= zi for wi, zi in zip(w, z)):
                dominated = True
                break
        if not dominated:
            out.add(z)
    return out


def brute_local_upper_bounds(points) -> set:
    """Apices of the maximal open orthants avoiding a nondominated cloud.

    Candidates are taken from the grid of coordinate values per axis plus
    INF; a candidate survives iff no point lies strictly below it
    (emptiness) and every finite coordinate is matched exactly by a point
    strictly below in all the other coordinates (maximality). The input
    must be nonempty and pairwise nondominated.
    """
    pts = sorted({tuple(p) for p in points})
    if not pts:
        raise ValueError("a nonempty point set is required")
    dim = len(pts[0])
    if brute_nondominated(pts) != set(pts):
        raise ValueError("input must be pairwise nondominated")
    axes = [sorted({p[j] for p in pts}) + [INF] for j in range(dim)]
    out = []
    apex = [None] * dim

    def descend(axis, alive):
        # alive: points with p[l] <= apex[l] for every fixed axis l; points
        # above the partial apex can neither witness emptiness failure nor
        # touch a coordinate, and an empty candidate list cannot recover
        # maximality, so the subtree is pruned.
        if not alive:
            return
        if axis == dim:
            touched = [False] * dim
            for p in alive:
                eqs = 0
                eq_at = -1
                for j in range(dim):
                    if p[j] == apex[j]:
                        eqs += 1
                        eq_at = j
                if eqs == 0:
                    return  # p lies strictly below: orthant not empty
                if eqs == 1:
                    touched[eq_at] = True
            if all(touched[j] or apex[j] == INF for j in range(dim)):
                out.append(tuple(apex))
            return
        for value in axes[axis]:
            apex[axis] = value
            descend(axis + 1, [p for p in alive if p[axis] <= value])

    descend(0, pts)
    return set(out)


@dataclass(frozen=True)
class CrossCheckReport:
    """Outcome of one solver-versus-brute-force comparison, with full
    symmetric differences for debugging."""

    passed: bool
    cloud_size: int
    nondominated: tuple
    bounds: tuple
    scalarizations: int
    expected_calls: int
    missing_nondominated: tuple
    extra_nondominated: tuple
    missing_bounds: tuple
    extra_bounds: tuple


def cross_check(points, *, dim=None, queue="fifo", seed=None) -> CrossCheckReport:
    """Solve an explicit cloud and compare against the brute-force oracles.

    Checks the nondominated set, the local upper bounds, and the exact
    scalarization count. For an empty cloud the expected bound set is the
    single all-INF apex.
    """
    oracle = ExplicitSetOracle(points, dim=dim)
    result = solve(oracle, queue=queue, seed=seed)
    expected_n = brute_nondominated(oracle.outcomes)
    if expected_n:
        expected_b = brute_local_upper_bounds(expected_n)
    else:
        expected_b = {(INF,) * oracle.dim}
    got_n = set(result.nondominated)
    got_b = set(result.bounds)
    expected_calls = len(expected_n) + len(expected_b)
    passed = (
        got_n == expected_n
        and got_b == expected_b
        and result.stats.scalarization_calls == expected_calls
    )
    return CrossCheckReport(
        passed=passed,
        cloud_size=len(oracle.outcomes),
        nondominated=result.nondominated,
        bounds=result.bounds,
        scalarizations=result.stats.scalarization_calls,
        expected_calls=expected_calls,
        missing_nondominated=tuple(sorted(expected_n - got_n)),
        extra_nondominated=tuple(sorted(got_n - expected_n)),
        missing_bounds=tuple(sorted(expected_b - got_b)),
        extra_bounds=tuple(sorted(got_b - expected_b)),
    )
