"""Monomial tropical cones, their complementary cones, and extremality.

A finite set G of max-side points, each normalized to 0th coordinate zero,
spans a max-tropical cone that is a union of sectors, one per generator.
Closing up the complement of that cone in R^{d+1} gives a min-tropical cone
whose extremal generators are the local upper bounds of G read as a point
cloud: the apices of the maximal open orthants that avoid G.

This module maintains the extremal generators of the complementary cone
under insertion of one generator at a time, in the style of the double
description method. Two independent extremality tests are provided, one
working against the sector (exterior) description and one working inside
the generating set alone, plus the monomial-ideal reading of the same
duality: minimal generators of a monomial ideal on one side, irreducible
components on the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    INF,
    NEG_INF,
    Infinity,
    cw_min,
    embed_outcome,
    normalize,
    scalar_shift,
)

__all__ = [
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
]


def min_unit(index: int, dim: int) -> tuple:
    """Min-side tropical unit vector: 0 in one coordinate, INF elsewhere."""
    if not 0 <= index <= dim:
        raise ValueError(f"unit index {index} out of range for dimension {dim}")
    return tuple(0 if k == index else INF for k in range(dim + 1))


def trivial_generators(dim: int) -> frozenset:
    """The units e(1)..e(d); extremal for every complementary cone."""
    return frozenset(min_unit(i, dim) for i in range(1, dim + 1))


def _is_unit(point) -> bool:
    finite = [i for i, v in enumerate(point) if v != INF]
    return len(finite) == 1 and point[finite[0]] == 0


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a monomial max-tropical cone.

    Every generator has 0th coordinate zero. NEG_INF entries are allowed
    (the sector of such a generator simply ignores that coordinate); INF
    entries are not, they belong to the min side. Points are stored sorted
    and deduplicated, so equal sets compare equal regardless of input order.
    """

    dim: int
    points: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        cleaned = sorted({tuple(g) for g in self.points})
        for g in cleaned:
            if len(g) != self.dim + 1:
                raise ValueError(f"generator {g!r} does not have {self.dim + 1} coordinates")
            if g[0] != 0:
                raise ValueError(f"generator {g!r} must have 0th coordinate 0")
            for v in g[1:]:
                if isinstance(v, Infinity) and v.sign > 0:
                    raise ValueError(f"generator {g!r} contains INF; max-side points may not")
        object.__setattr__(self, "points", tuple(cleaned))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return tuple(point) in self.points

    def added(self, point) -> "GeneratorSet":
        return GeneratorSet(self.dim, self.points + (tuple(point),))

    def contains(self, x) -> bool:
        """Membership of a real point in the union of sectors.

        A generator whose support is only {0} contributes the entire space
        (its sector inequality has an empty right hand side).
        """
        x = tuple(x)
        if len(x) != self.dim + 1:
            raise ValueError(f"point {x!r} does not have {self.dim + 1} coordinates")
        for v in x:
            if isinstance(v, Infinity):
                raise ValueError("membership is only defined for all-finite points")
        for g in self.points:
            base = x[0] - g[0]
            inside = True
            for j in range(1, self.dim + 1):
                if g[j] == NEG_INF:
                    continue
                if base > x[j] - g[j]:
                    inside = False
                    break
            if inside:
                return True
        return False


@dataclass(frozen=True)
class ApexSet:
    """Extremal generators of a complementary min-tropical cone.

    Always contains the d trivial units. Every nontrivial member is
    normalized (0th coordinate zero) and min-side, so NEG_INF never occurs
    and equality of apices is literal tuple equality.
    """

    dim: int
    points: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        units = trivial_generators(self.dim)
        cleaned = {tuple(a) for a in self.points} | units
        for a in cleaned:
            if len(a) != self.dim + 1:
                raise ValueError(f"apex {a!r} does not have {self.dim + 1} coordinates")
            for v in a:
                if v == NEG_INF:
                    raise ValueError(f"apex {a!r} contains NEG_INF; min-side points may not")
            if a[0] != 0 and not (a[0] == INF and _is_unit(a)):
                raise ValueError(f"apex {a!r} is neither normalized nor a trivial unit")
        object.__setattr__(self, "points", tuple(sorted(cleaned)))

    @classmethod
    def initial(cls, dim: int) -> "ApexSet":
        """Apices for the empty generator set: the units plus e(0)."""
        return cls(dim, (min_unit(0, dim),))

    def nontrivial(self) -> tuple:
        units = trivial_generators(self.dim)
        return tuple(a for a in self.points if a not in units)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return tuple(point) in self.points


def is_extremal_apex(apex, gens: GeneratorSet) -> bool:
    """Extremality test against the sector description of the cone.

    The apex is extremal exactly when for every index j of its support
    (0 excluded) some generator g attains its minimal gap min_l(a_l - g_l)
    uniquely at j, with that minimum equal to a_0 - g_0. Gaps against a
    NEG_INF generator coordinate count as INF. Trivial units are extremal
    by fiat and never evaluated.
    """
    a = tuple(apex)
    dim = gens.dim
    if len(a) != dim + 1:
        raise ValueError(f"apex {a!r} does not have {dim + 1} coordinates")
    for v in a:
        if v == NEG_INF:
            raise ValueError(f"apex {a!r} contains NEG_INF; min-side points may not")
    if a[0] == INF:
        if not _is_unit(a):
            raise ValueError(f"apex {a!r} has infinite 0th coordinate but is not a unit")
        return True
    sup = [j for j in range(1, dim + 1) if a[j] != INF]
    if not sup:
        return True
    needed = set(sup)
    witnessed = set()
    for g in gens:
        base = a[0] - g[0]
        best = None
        best_j = None
        tie = False
        for j in sup:
            diff = a[j] - g[j]
            if best is None or diff < best:
                best, best_j, tie = diff, j, False
            elif diff == best:
                tie = True
        if not tie and best == base:
            witnessed.add(best_j)
            if witnessed >= needed:
                return True
    return witnessed >= needed


def is_extremal_inner(point, generators) -> bool:
    """Extremality test inside a generating set, without sector data.

    A generator is redundant exactly when some other generator, tropically
    scaled to match its 0th coordinate, lies componentwise at or above it.
    The comparison is evaluated in cross-multiplied form
    (a_0 + b_i <= a_i + b_0) so infinite coordinates need no special
    treatment. Only literally equal tuples are excluded as "the same"
    generator; scaled duplicates must be normalized away beforehand.
    Trivial units are extremal by fiat.
    """
    b = tuple(point)
    if b[0] == INF:
        return True
    dim = len(b) - 1
    for other in generators:
        a = tuple(other)
        if a == b:
            continue
        dominated = True
        for i in range(1, dim + 1):
            if a[0] + b[i] > a[i] + b[0]:
                dominated = False
                break
        if dominated:
            return False
    return True


def _min_gap(point, h, dim: int):
    """min over i in 1..d of point_i - h_i; mixed infinities give INF."""
    best = INF
    for i in range(1, dim + 1):
        diff = point[i] - h[i]
        if diff < best:
            best = diff
    return best


@dataclass(frozen=True)
class InsertionRecord:
    """Audit trail of one insertion step, mainly for cross-checking the
    two extremality tests against each other."""

    inserted: tuple
    generators: GeneratorSet
    kept: tuple
    candidates: tuple
    accepted: tuple


def new_extremals(gens: GeneratorSet, apices: ApexSet, h, candidate_log=None) -> ApexSet:
    """Extremal generators of the complementary cone after inserting h.

    Preconditions: ``apices`` is exactly the extremal generator set of the
    cone complementary to ``gens``, and ``h`` is a max-side point with 0th
    coordinate zero (typically an embedded outcome, but NEG_INF entries
    are allowed). Apices that satisfy the new sector inequality survive
    unchanged; every genuinely new extremal generator arises as the
    componentwise min of a scaled survivor with a dropped apex, where the
    scale pushes the survivor onto the boundary of the new sector. A
    survivor whose gap against h is INF cannot be scaled onto that
    boundary, its pairs degenerate to the dropped apex itself and are
    skipped. Candidates are deduplicated after normalization and kept iff
    they pass the extremality test against the enlarged generator set.

    Candidate tests are independent of each other; with ``candidate_log``
    a list, one :class:`InsertionRecord` per call is appended to it.
    """
    h = tuple(h)
    dim = apices.dim
    if gens.dim != dim:
        raise ValueError("generator and apex sets have different dimensions")
    if len(h) != dim + 1:
        raise ValueError(f"point {h!r} does not have {dim + 1} coordinates")
    if h[0] != 0:
        raise ValueError(f"inserted generator {h!r} must have 0th coordinate 0")
    for v in h[1:]:
        if isinstance(v, Infinity) and v.sign > 0:
            raise ValueError(f"inserted generator {h!r} contains INF")

    enlarged = gens.added(h)
    kept = []
    dropped = []
    for a in apices.points:
        if a[0] >= _min_gap(a, h, dim):
            kept.append(a)
        else:
            dropped.append(a)

    candidates = set()
    if dropped:
        for b in kept:
            gap = _min_gap(b, h, dim)
            if gap == INF:
                continue
            shifted = scalar_shift(-gap, b)
            for c in dropped:
                candidates.add(normalize(cw_min(shifted, c)))

    result = set(kept)
    accepted = []
    for cand in sorted(candidates):
        if is_extremal_apex(cand, enlarged):
            accepted.append(cand)
            result.add(cand)

    if candidate_log is not None:
        candidate_log.append(
            InsertionRecord(
                inserted=h,
                generators=enlarged,
                kept=tuple(kept),
                candidates=tuple(sorted(candidates)),
                accepted=tuple(accepted),
            )
        )
    return ApexSet(dim, result)


def complementary_apices(gens: GeneratorSet, candidate_log=None) -> ApexSet:
    """Extremal generators of the complementary cone, built by inserting
    the generators one at a time."""
    apices = ApexSet.initial(gens.dim)
    done = GeneratorSet(gens.dim)
    for h in gens:
        apices = new_extremals(done, apices, h, candidate_log=candidate_log)
        done = done.added(h)
    return apices


def irreducible_components(exponents) -> set:
    """Irreducible components of the monomial ideal with the given minimal
    generator exponents.

    Each returned vector encodes one component: a finite entry a_j stands
    for the factor x_j**a_j, an INF entry means the variable is absent.
    Apices with a zero entry would encode the unit ideal as a component
    and are dropped.
    """
    exps = sorted({tuple(e) for e in exponents})
    if not exps:
        raise ValueError("the zero ideal has no irreducible decomposition here")
    dim = len(exps[0])
    if dim < 1:
        raise ValueError("exponent vectors must have at least one coordinate")
    for e in exps:
        if len(e) != dim:
            raise ValueError("exponent vectors have mixed lengths")
        for v in e:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"exponent {v!r} is not a nonnegative integer")
    gens = GeneratorSet(dim, tuple(embed_outcome(e) for e in exps))
    components = set()
    for apex in complementary_apices(gens).nontrivial():
        tail = apex[1:]
        if any(v == 0 for v in tail):
            continue
        components.add(tail)
    return components
