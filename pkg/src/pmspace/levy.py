"""Modified Levy metric on step distributions.

d(F, G) is the infimum of h > 0 such that, for every t in [0, 1/h),
G(t) <= F(t+h) + h and F(t) <= G(t+h) + h. It metrizes weak convergence,
is bounded by 1 (h = 1 is always admissible because values live in [0, 1]),
and the admissible-h set is up-closed, so bisection on (0, 1] encloses the
infimum. The per-h decision is exact: both inequalities are piecewise
constant in t, so they are checked at the finitely many piece openings
instead of being sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .distributions import Distribution
from .errors import NonPositiveH

DEFAULT_BISECT_TOL = 1e-12

__all__ = [
    "DEFAULT_BISECT_TOL",
    "LevyResult",
    "admissible",
    "levy_distance",
    "heaviside_distance",
    "weakly_converges",
]


@dataclass(frozen=True, slots=True)
class LevyResult:
    """Bisection outcome: value is the midpoint of the enclosing bracket.

    bracket = (lower, upper) with lower <= value <= upper and
    upper - lower <= the requested tolerance (exactly (0, 0) when the
    inputs are canonically equal).
    """

    value: float
    bracket: tuple[float, float]
    iterations: int


def admissible(f: Distribution, g: Distribution, h: float) -> bool:
    """Exact decision whether shift h satisfies both one-sided conditions."""
    h = float(h)
    if math.isnan(h) or h <= 0.0:
        raise NonPositiveH(f"shift h must be positive, got {h!r}")
    return _backend.kernels.admissible(f.locs, f.levels, g.locs, g.levels, h)


def levy_distance(
    f: Distribution, g: Distribution, bisect_tol: float = DEFAULT_BISECT_TOL
) -> LevyResult:
    """Enclose the distance in a bracket of width <= bisect_tol.

    Canonically equal inputs return the exact zero bracket without
    iterating. The reported value is the bracket midpoint, so its error is
    at most bisect_tol / 2.
    """
    bisect_tol = float(bisect_tol)
    if math.isnan(bisect_tol) or bisect_tol <= 0.0:
        raise NonPositiveH(f"bisect_tol must be positive, got {bisect_tol!r}")
    lo, hi, iterations = _backend.kernels.levy_bracket(
        f.locs, f.levels, g.locs, g.levels, bisect_tol
    )
    return LevyResult(0.5 * (lo + hi), (lo, hi), iterations)


def heaviside_distance(a: float, b: float) -> float:
    """Closed form for two unit steps: min(1, |b - a|, 1/min(a, b)).

    The reciprocal term is +inf when min(a, b) == 0. Arguments may be +inf
    (the everywhere-zero distribution); two equal steps have distance 0.
    """
    a, b = float(a), float(b)
    if math.isnan(a) or a < 0.0 or math.isnan(b) or b < 0.0:
        raise NonPositiveH(f"step locations must be >= 0, got {a!r}, {b!r}")
    if a == b:
        return 0.0
    lo = min(a, b)
    recip = 1.0 / lo if lo > 0.0 else math.inf
    return min(1.0, abs(b - a), recip)


def weakly_converges(
    fs: Sequence[Distribution], f: Distribution, tol: float = 0.05
) -> bool:
    """Desk-scale weak-convergence proxy for a finite prefix.

    True iff the distance sequence d(fs[n], f) is nonincreasing up to tol at
    every step and its final term is below tol. A genuinely divergent
    sequence keeps its distances bounded away from 0 and fails the final
    test no matter how long the prefix is.
    """
    if not fs:
        raise ValueError("weakly_converges needs a nonempty prefix")
    ds = [levy_distance(fn, f).value for fn in fs]
    if ds[-1] >= tol:
        return False
    return all(ds[i + 1] <= ds[i] + tol for i in range(len(ds) - 1))
