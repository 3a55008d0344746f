"""Value-level algebra: numbers of the form d + c*I and closed real intervals.

A NeutroValue is a determinate part plus a coefficient on the indeterminacy
symbol I.  The only operations the decision method needs are addition and
scaling by a real weight, so the linear form is closed: no I*I term can ever
arise.  Substituting a concrete value for I collapses a NeutroValue to a real;
substituting the two ends of an I-range collapses it to an Interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class NonFiniteError(ValueError):
    """An operation produced (or was given) NaN or infinity."""


def _require_finite(*xs: float) -> None:
    for x in xs:
        if not math.isfinite(x):
            raise NonFiniteError("non-finite result")


@dataclass(frozen=True)
class NeutroValue:
    """A number d + c*I with determinate part ``det`` and I-coefficient ``ind``."""

    det: float
    ind: float = 0.0

    def __post_init__(self) -> None:
        _require_finite(self.det, self.ind)

    @property
    def is_crisp(self) -> bool:
        return self.ind == 0.0

    def __add__(self, other: "NeutroValue") -> "NeutroValue":
        return NeutroValue(self.det + other.det, self.ind + other.ind)

    def scale(self, w: float) -> "NeutroValue":
        _require_finite(w)
        return NeutroValue(w * self.det, w * self.ind)

    def __rmul__(self, w: float) -> "NeutroValue":
        return self.scale(w)

    def evaluate(self, i_value: float) -> float:
        """Substitute a concrete value for I."""
        _require_finite(i_value)
        result = self.det + self.ind * i_value
        _require_finite(result)
        return result

    def to_interval(self, i_min: float, i_max: float) -> "Interval":
        """Collapse to the interval swept as I ranges over [i_min, i_max].

        The value is linear in I, so the extremes sit at the bounds; min/max
        ordering handles negative ``ind`` coefficients.
        """
        _require_finite(i_min, i_max)
        if i_min > i_max:
            raise ValueError("invalid I-bounds: i_min > i_max")
        e1 = self.evaluate(i_min)
        e2 = self.evaluate(i_max)
        return Interval(min(e1, e2), max(e1, e2))


class IntervalRelation(Enum):
    DISJOINT_BELOW = "disjoint-below"
    DISJOINT_ABOVE = "disjoint-above"
    OVERLAPPING = "overlapping"
    CONTAINS = "contains"
    CONTAINED_IN = "contained-in"
    EQUAL = "equal"


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        _require_finite(self.lo, self.hi)
        if self.lo > self.hi:
            raise ValueError(f"invalid interval: lo {self.lo} > hi {self.hi}")

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains_value(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def relation_to(self, other: "Interval") -> IntervalRelation:
        """Position of this interval relative to ``other``."""
        if self.lo == other.lo and self.hi == other.hi:
            return IntervalRelation.EQUAL
        if self.hi < other.lo:
            return IntervalRelation.DISJOINT_BELOW
        if self.lo > other.hi:
            return IntervalRelation.DISJOINT_ABOVE
        if other.lo <= self.lo and self.hi <= other.hi:
            return IntervalRelation.CONTAINED_IN
        if self.lo <= other.lo and other.hi <= self.hi:
            return IntervalRelation.CONTAINS
        return IntervalRelation.OVERLAPPING
