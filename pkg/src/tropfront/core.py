"""Exact extended-rational scalars and elementary tropical point operations.

Coordinates live in the extended rationals: exact rationals plus the two
infinities INF and NEG_INF. All arithmetic is exact, so equality and order
comparisons are decidable; decimal inputs must be converted at the boundary
with :func:`as_scalar`. Tropical points are plain tuples of length d+1 with
coordinates indexed 0..d, hence they hash, compare and sort like any tuple.

The same tuple type serves both semirings. A point used on the min side may
contain INF but never NEG_INF, and vice versa on the max side; which side a
point lives on is the caller's contract and is checked where it matters, at
the cone module boundaries.
"""

from __future__ import annotations

from fractions import Fraction

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
]

_RATIONAL = (int, Fraction)


class Infinity:
    """Signed infinite endpoint; use the module singletons INF and NEG_INF.

    Implements exactly the mixed arithmetic the tropical calculations need:
    an infinity absorbs finite summands, and a difference of opposite
    infinities takes the sign of the minuend. Same-sign differences such as
    INF - INF are undefined and raise ArithmeticError instead of silently
    picking a convention, so misuse surfaces immediately.
    """

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = 1 if sign > 0 else -1

    def __repr__(self):
        return "inf" if self.sign > 0 else "-inf"

    def __neg__(self):
        return NEG_INF if self.sign > 0 else INF

    def __add__(self, other):
        if isinstance(other, Infinity):
            if other.sign != self.sign:
                raise ArithmeticError("inf + -inf is undefined")
            return self
        if isinstance(other, _RATIONAL):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Infinity):
            if other.sign == self.sign:
                raise ArithmeticError(f"{self!r} - {other!r} is undefined")
            return self
        if isinstance(other, _RATIONAL):
            return self
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RATIONAL):
            return -self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Infinity):
            return self.sign == other.sign
        if isinstance(other, _RATIONAL):
            return False
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(("tropfront.Infinity", self.sign))

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        if isinstance(other, _RATIONAL):
            return self.sign < 0
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Infinity):
            return self.sign <= other.sign
        if isinstance(other, _RATIONAL):
            return self.sign < 0
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Infinity):
            return self.sign > other.sign
        if isinstance(other, _RATIONAL):
            return self.sign > 0
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Infinity):
            return self.sign >= other.sign
        if isinstance(other, _RATIONAL):
            return self.sign > 0
        return NotImplemented


INF = Infinity(1)
NEG_INF = Infinity(-1)


def is_finite(value) -> bool:
    return not isinstance(value, Infinity)


def as_scalar(value):
    """Convert a value to an exact finite scalar (int or Fraction).

    Accepts ints, Fractions and strings such as "7", "3/4" or "0.25".
    Floats are rejected on purpose: a binary float no longer carries the
    decimal literal the caller meant, so the conversion to an exact
    rational has to happen at the input boundary.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        frac = Fraction(value)
        return int(frac) if frac.denominator == 1 else frac
    if isinstance(value, float):
        raise TypeError(
            f"refusing inexact float {value!r}; pass a string or Fraction instead"
        )
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def support(point, side: str = "min") -> set:
    """Indices of the coordinates that are finite for the given semiring side.

    On the min side the missing value is INF, on the max side NEG_INF. A
    well-formed point only ever carries the missing value of its own side;
    stating the side is the caller's job.
    """
    if side == "min":
        missing = INF
    elif side == "max":
        missing = NEG_INF
    else:
        raise ValueError(f"side must be 'min' or 'max', not {side!r}")
    return {i for i, v in enumerate(point) if v != missing}


def scalar_shift(amount, point) -> tuple:
    """Tropical scaling: add a finite amount to every coordinate.

    Infinite coordinates absorb the shift and stay put.
    """
    if isinstance(amount, Infinity):
        raise ValueError("shift amount must be finite")
    return tuple(v + amount for v in point)


def cw_min(x, y) -> tuple:
    """Componentwise minimum of two points of equal length, INF on top."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a if a <= b else b for a, b in zip(x, y))


def normalize(point) -> tuple:
    """The representative of point + R*(1,...,1) with 0th coordinate zero."""
    base = point[0]
    if isinstance(base, Infinity):
        raise ValueError("cannot normalize a point with infinite 0th coordinate")
    if base == 0:
        return tuple(point)
    return tuple(v - base for v in point)


def embed_outcome(outcome) -> tuple:
    """Lift a d-vector of finite scalars into the hyperplane {x_0 = 0}."""
    if len(outcome) == 0:
        raise ValueError("outcomes must have at least one coordinate")
    for v in outcome:
        if isinstance(v, Infinity):
            raise ValueError("outcomes must be finite")
    return (0, *outcome)


def dominates_leq(left, right) -> bool:
    """Componentwise <= between two vectors of equal length."""
    if len(left) != len(right):
        raise ValueError(f"dimension mismatch: {len(left)} vs {len(right)}")
    return all(a <= b for a, b in zip(left, right))
