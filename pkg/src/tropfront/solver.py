"""Main enumeration loop for the nondominated set.

The loop state is the triple (found outcomes, current apex set, confirmed
apices). Each iteration pops one unconfirmed apex and asks the oracle for a
nondominated outcome strictly below it: either one is found, in which case
the apex set is updated by a single insertion, or the apex is confirmed as
a final local upper bound. The loop stops when every apex is confirmed.
The answer and the iteration count n + m do not depend on the pop order,
which is exposed as a queue discipline purely for testing that fact.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .bounds import upper_bound
from .cones import ApexSet, GeneratorSet, min_unit, new_extremals, trivial_generators
from .core import embed_outcome
from .scalarize import ProblemOracle, next_nondominated

__all__ = [
    "RunStats",
    "SolveResult",
    "GeneratorState",
    "IterationLimitError",
    "solve",
    "run_report",
]

QUEUE_DISCIPLINES = ("fifo", "lifo", "random")


class IterationLimitError(RuntimeError):
    """The loop exceeded its iteration cap; the oracle or the update step
    violated a contract that guarantees termination."""


@dataclass(frozen=True)
class RunStats:
    """Counters of a finished run.

    n is the number of nondominated points, m the number of nontrivial
    final local upper bounds (the all-space apex counts as nontrivial, so
    an empty problem has m = 1). Always scalarization_calls == n + m.
    """

    scalarization_calls: int
    n: int
    m: int
    upper_bound: int
    wall_time: float


@dataclass(frozen=True)
class SolveResult:
    nondominated: tuple
    bounds: tuple
    stats: RunStats


@dataclass(frozen=True)
class GeneratorState:
    """Snapshot handed to the on_state callback after every iteration."""

    found: tuple
    apices: ApexSet
    confirmed: frozenset
    pending: tuple


def solve(
    oracle: ProblemOracle,
    *,
    queue: str = "fifo",
    seed=None,
    max_iter=None,
    candidate_log=None,
    on_state=None,
) -> SolveResult:
    """Compute the nondominated set and the final local upper bounds.

    Returns the nondominated outcomes and the nontrivial local upper
    bounds as sorted tuples of d-vectors (apices lose their homogenizing
    0th coordinate; INF coordinates mean "unbounded in that objective"),
    plus run statistics. ``max_iter`` defaults to ten times the worst-case
    bound for the materialized outcome set and exists only to turn a
    hypothetical contract violation into an error instead of a hang.
    """
    if queue not in QUEUE_DISCIPLINES:
        raise ValueError(f"unknown queue discipline {queue!r}")
    d = oracle.dim
    if max_iter is None:
        max_iter = 10 * upper_bound(len(oracle.outcomes) + d, d)
    rng = random.Random(seed)

    gens = GeneratorSet(d)
    apices = ApexSet.initial(d)
    confirmed = set(trivial_generators(d))
    pending = [min_unit(0, d)]
    calls = 0
    started = time.perf_counter()

    while pending:
        if calls >= max_iter:
            raise IterationLimitError(
                f"no convergence within {max_iter} iterations"
            )
        if queue == "fifo":
            apex = pending.pop(0)
        elif queue == "lifo":
            apex = pending.pop()
        else:
            apex = pending.pop(rng.randrange(len(pending)))
        calls += 1

        outcome = next_nondominated(oracle, apex)
        if outcome is None:
            confirmed.add(apex)
        else:
            h = embed_outcome(outcome)
            if h in gens:
                raise IterationLimitError(
                    f"oracle returned the already-known point {outcome!r}"
                )
            updated = new_extremals(gens, apices, h, candidate_log=candidate_log)
            gens = gens.added(h)
            survivors = set(updated.points)
            fresh = sorted(survivors - set(apices.points))
            pending = [p for p in pending if p in survivors]
            pending.extend(fresh)
            apices = updated
        if on_state is not None:
            on_state(
                GeneratorState(
                    found=gens.points,
                    apices=apices,
                    confirmed=frozenset(confirmed),
                    pending=tuple(pending),
                )
            )

    elapsed = time.perf_counter() - started
    nondominated = tuple(sorted(g[1:] for g in gens))
    units = trivial_generators(d)
    bounds_out = tuple(sorted(a[1:] for a in apices if a not in units))
    stats = RunStats(
        scalarization_calls=calls,
        n=len(nondominated),
        m=len(bounds_out),
        upper_bound=upper_bound(len(nondominated) + d, d),
        wall_time=elapsed,
    )
    return SolveResult(nondominated=nondominated, bounds=bounds_out, stats=stats)


def run_report(stats: RunStats) -> dict:
    """Structured summary of a finished run."""
    return {
        "n": stats.n,
        "m": stats.m,
        "scalarizations": stats.scalarization_calls,
        "upper_bound_U": stats.upper_bound,
        "calls_match": stats.scalarization_calls == stats.n + stats.m,
        "wall_time_s": stats.wall_time,
    }
