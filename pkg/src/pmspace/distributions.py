"""Step distribution functions on the nonnegative half-line.

A distribution here is a nondecreasing, left-continuous step function F with
F(t) = 0 for t <= 0 and F(+inf) = 1, represented canonically by its finite
jump list: strictly increasing locations >= 0 paired with strictly increasing
levels in (0, 1]. The value at t is the largest level whose location lies
strictly below t (0 if none), so F(0) = 0 holds automatically and a top level
below 1 leaves the remaining mass at infinity. The empty jump list is the
function that is 0 everywhere on the reals (the minimal element); the unit
step at 0 is the maximal element.

All values are immutable; operations are pure functions. Comparisons inside
the algebra are exact binary64 comparisons, never epsilon tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .errors import LevelOutOfRange, NegativeLocation, NonMonotone

_INF = float("inf")

__all__ = [
    "Distribution",
    "make_step",
    "heaviside",
    "pointwise_max",
]


@dataclass(frozen=True, slots=True)
class Distribution:
    """Canonical step distribution: parallel jump locations and levels.

    The constructor validates canonical form and rejects rather than
    repairs; use make_step to build from an unsorted jump list.
    """

    locs: tuple[float, ...]
    levels: tuple[float, ...]

    def __post_init__(self) -> None:
        locs = tuple(float(x) for x in self.locs)
        levels = tuple(float(x) for x in self.levels)
        object.__setattr__(self, "locs", locs)
        object.__setattr__(self, "levels", levels)
        if len(locs) != len(levels):
            raise NonMonotone(
                f"jump list is ragged: {len(locs)} locations, {len(levels)} levels"
            )
        for t in locs:
            if math.isnan(t) or t < 0.0 or t == _INF:
                raise NegativeLocation(f"jump location {t!r} is not a finite value >= 0")
        for v in levels:
            if math.isnan(v) or not 0.0 < v <= 1.0:
                raise LevelOutOfRange(f"jump level {v!r} lies outside (0, 1]")
        for i in range(1, len(locs)):
            if locs[i] <= locs[i - 1]:
                raise NonMonotone(
                    f"jump locations must increase strictly: {locs[i - 1]!r} then {locs[i]!r}"
                )
            if levels[i] <= levels[i - 1]:
                raise NonMonotone(
                    f"jump levels must increase strictly: {levels[i - 1]!r} then {levels[i]!r}"
                )

    @property
    def jumps(self) -> tuple[tuple[float, float], ...]:
        return tuple(zip(self.locs, self.levels))

    def __call__(self, t: float) -> float:
        """Left-continuous value at t; +inf evaluates to 1 by convention."""
        if t == _INF:
            return 1.0
        return _backend.kernels.eval_left(self.locs, self.levels, t)

    def right_limit(self, t: float) -> float:
        """Value just above t, i.e. the limit of F(s) as s decreases to t."""
        if t == _INF:
            return 1.0
        return _backend.kernels.eval_right(self.locs, self.levels, t)

    def __le__(self, other: "Distribution") -> bool:
        """Exact pointwise order F(t) <= G(t) for all t (a partial order)."""
        if not isinstance(other, Distribution):
            return NotImplemented
        return _backend.kernels.leq(self.locs, self.levels, other.locs, other.levels)

    def translate(self, by: float) -> "Distribution":
        """Shift every jump location right by `by` >= 0 (delays the mass)."""
        if math.isnan(by) or by < 0.0:
            raise NegativeLocation(f"translation offset {by!r} is not a value >= 0")
        return Distribution(tuple(t + by for t in self.locs), self.levels)

    def top_level(self) -> float:
        """Largest finite-location level; the rest of the mass sits at +inf."""
        return self.levels[-1] if self.levels else 0.0

    def max_loc(self) -> float:
        """Largest jump location, 0.0 for the empty jump list."""
        return self.locs[-1] if self.locs else 0.0


def make_step(jumps: Iterable[tuple[float, float]]) -> Distribution:
    """Build a canonical Distribution from (location, level) pairs.

    Pairs are sorted by location and exact duplicate pairs are dropped; any
    remaining violation (repeated location, non-increasing level, location
    < 0, level outside (0, 1]) raises instead of being repaired.
    """
    cleaned: list[tuple[float, float]] = []
    for pair in jumps:
        t, v = pair
        cleaned.append((float(t), float(v)))
    cleaned = sorted(set(cleaned))
    return Distribution(
        tuple(t for t, _ in cleaned), tuple(v for _, v in cleaned)
    )


def heaviside(a: float) -> Distribution:
    """Unit step at a: 0 on (-inf, a], 1 on (a, +inf). heaviside(inf) is the
    everywhere-zero minimal element (all mass at infinity)."""
    a = float(a)
    if a == _INF:
        return Distribution((), ())
    if math.isnan(a) or a < 0.0:
        raise NegativeLocation(f"step location {a!r} is not a finite value >= 0")
    return Distribution((a,), (1.0,))


def pointwise_max(fs: Sequence[Distribution]) -> Distribution:
    """Pointwise maximum of a nonempty list, the least upper bound.

    The result is a step function whose jumps lie in the union of the input
    jump locations; the value just above each candidate is the max of the
    inputs' right limits there.
    """
    if not fs:
        raise ValueError("pointwise_max of an empty list")
    cands = sorted({t for f in fs for t in f.locs})
    out_l: list[float] = []
    out_v: list[float] = []
    best = 0.0
    for c in cands:
        v = max(f.right_limit(c) for f in fs)
        if v > best:
            out_l.append(c)
            out_v.append(v)
            best = v
    return Distribution(tuple(out_l), tuple(out_v))
