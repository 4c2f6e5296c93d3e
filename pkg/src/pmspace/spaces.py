"""Finite probabilistic metric spaces and their canonical metrization.

A space assigns a step distribution D(x, y) to each unordered pair of
points: D(x, y)(t) reads as the probability that the distance between x and
y is below t. The axioms are identity (D(x, y) is the unit step at 0 iff
x = y), symmetry (structural here: one distribution per unordered pair),
and the triangle inequality D(x, y) * D(y, z) <= D(x, z) under the space's
triangle function.

The point-to-point distance d(x, y) -> Levy distance of D(x, y) from the
unit step, maximized over comparisons against every third point, is an
ordinary metric that generates the same topology; it is sandwiched between
the plain Levy distance to the unit step and k times it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .distributions import Distribution, heaviside
from .errors import (
    IncompatibleTriangleFn,
    InvalidSpace,
    NonPositiveT,
    NotAMetric,
    ShapeMismatch,
    UnknownPoint,
)
from .levy import DEFAULT_BISECT_TOL, levy_distance
from .triangle import Kind, TriangleFunction

__all__ = [
    "PMSpace",
    "Violation",
    "SpaceReport",
    "validate",
    "induced_from_metric",
    "canonical_metric",
    "canonical_metric_matrix",
    "lower_matrix",
    "strong_neighborhood",
    "neighborhood_matches_ball",
    "MetrizationReport",
    "metrization_report",
]

_UNIT = heaviside(0.0)


@dataclass(frozen=True)
class PMSpace:
    """Finite point set, triangle function, and upper-triangular distances.

    dists holds D(points[i], points[j]) for i < j in row-major pair order;
    the diagonal is implicitly the unit step at 0 and symmetry holds by
    storage. Build with from_pairs (labelled pairs, each unordered pair
    exactly once) or from_matrix (full matrix, symmetry checked).
    """

    points: tuple[str, ...]
    tf: TriangleFunction
    dists: tuple[Distribution, ...]

    def __post_init__(self) -> None:
        pts = tuple(str(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ShapeMismatch("point labels must be distinct")
        if not pts:
            raise ShapeMismatch("a space needs at least one point")
        n = len(pts)
        want = n * (n - 1) // 2
        if len(self.dists) != want:
            raise ShapeMismatch(
                f"{n} points need {want} pair distances, got {len(self.dists)}"
            )

    @classmethod
    def from_pairs(
        cls,
        points: Sequence[str],
        tf: TriangleFunction,
        pairs: Mapping[tuple[str, str], Distribution],
    ) -> "PMSpace":
        pts = tuple(str(p) for p in points)
        index = {p: i for i, p in enumerate(pts)}
        n = len(pts)
        slots: list[Distribution | None] = [None] * (n * (n - 1) // 2)
        for (x, y), dist in pairs.items():
            if x not in index:
                raise UnknownPoint(f"unknown point label {x!r}")
            if y not in index:
                raise UnknownPoint(f"unknown point label {y!r}")
            i, j = index[x], index[y]
            if i == j:
                raise ShapeMismatch(f"diagonal entry {x!r} is implied and must be omitted")
            if i > j:
                i, j = j, i
            k = _pair_index(i, j, n)
            if slots[k] is not None:
                raise ShapeMismatch(f"pair ({pts[i]!r}, {pts[j]!r}) given more than once")
            slots[k] = dist
        for k, d in enumerate(slots):
            if d is None:
                i, j = _pair_unindex(k, n)
                raise ShapeMismatch(f"pair ({pts[i]!r}, {pts[j]!r}) is missing")
        return cls(points=pts, tf=tf, dists=tuple(slots))  # type: ignore[arg-type]

    @classmethod
    def from_matrix(
        cls,
        points: Sequence[str],
        tf: TriangleFunction,
        matrix: Sequence[Sequence[Distribution]],
    ) -> "PMSpace":
        pts = tuple(str(p) for p in points)
        n = len(pts)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ShapeMismatch(f"distance matrix must be {n}x{n}")
        for i in range(n):
            if matrix[i][i] != _UNIT:
                raise ShapeMismatch(
                    f"diagonal entry for {pts[i]!r} must be the unit step at 0"
                )
            for j in range(i + 1, n):
                if matrix[i][j] != matrix[j][i]:
                    raise ShapeMismatch(
                        f"matrix is not symmetric at ({pts[i]!r}, {pts[j]!r})"
                    )
        dists = tuple(matrix[i][j] for i in range(n) for j in range(i + 1, n))
        return cls(points=pts, tf=tf, dists=dists)

    def index(self, x: str) -> int:
        try:
            return self.points.index(x)
        except ValueError:
            raise UnknownPoint(f"unknown point label {x!r}") from None

    def distribution(self, x: str, y: str) -> Distribution:
        i, j = self.index(x), self.index(y)
        if i == j:
            return _UNIT
        if i > j:
            i, j = j, i
        return self.dists[_pair_index(i, j, len(self.points))]

    def pair_list(self) -> list[tuple[str, str]]:
        n = len(self.points)
        return [
            (self.points[i], self.points[j])
            for i in range(n)
            for j in range(i + 1, n)
        ]


def _pair_index(i: int, j: int, n: int) -> int:
    # row-major upper triangle, i < j
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _pair_unindex(k: int, n: int) -> tuple[int, int]:
    for i in range(n):
        row = n - i - 1
        if k < row:
            return i, i + 1 + k
        k -= row
    raise IndexError(k)


@dataclass(frozen=True)
class Violation:
    axiom: str
    points: tuple[str, ...]
    detail: str


@dataclass(frozen=True)
class SpaceReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(space: PMSpace) -> SpaceReport:
    """Check the space axioms exhaustively and exactly.

    Identity on the diagonal and symmetry hold structurally; what remains is
    that no off-diagonal distribution equals the unit step and that the
    triangle inequality holds for all ordered triples of distinct points
    (triples with a repeated point are automatic given the neutral element).
    """
    violations: list[Violation] = []
    pts = space.points
    for x, y in space.pair_list():
        if space.distribution(x, y) == _UNIT:
            violations.append(
                Violation(
                    axiom="identity",
                    points=(x, y),
                    detail="distinct points with the unit step as distance",
                )
            )
    for x in pts:
        for y in pts:
            if y == x:
                continue
            for z in pts:
                if z == x or z == y:
                    continue
                combined = space.tf(space.distribution(x, y), space.distribution(y, z))
                if not combined <= space.distribution(x, z):
                    violations.append(
                        Violation(
                            axiom="triangle",
                            points=(x, y, z),
                            detail="D(x,y) * D(y,z) !<= D(x,z)",
                        )
                    )
    return SpaceReport(violations=tuple(violations))


def induced_from_metric(
    points: Sequence[str],
    metric: Sequence[Sequence[float]],
    tf: TriangleFunction,
) -> PMSpace:
    """Space of unit steps at the metric distances.

    Valid because the construction turns unit steps at a and b into the unit
    step at a + b, which needs the sum kind; any other kind is rejected.
    The metric axioms are checked exactly on the given matrix.
    """
    if tf.kind is not Kind.SUM:
        raise IncompatibleTriangleFn(
            f"induced spaces need the sum kind, got {tf.kind.value!r}"
        )
    pts = tuple(str(p) for p in points)
    n = len(pts)
    if len(metric) != n or any(len(row) != n for row in metric):
        raise ShapeMismatch(f"metric matrix must be {n}x{n}")
    d = [[float(v) for v in row] for row in metric]
    for i in range(n):
        if d[i][i] != 0.0:
            raise NotAMetric(f"d({pts[i]!r},{pts[i]!r}) = {d[i][i]!r}, expected 0")
        for j in range(n):
            if math.isnan(d[i][j]) or math.isinf(d[i][j]) or d[i][j] < 0.0:
                raise NotAMetric(f"d({pts[i]!r},{pts[j]!r}) = {d[i][j]!r} is not finite >= 0")
            if i != j and d[i][j] == 0.0:
                raise NotAMetric(f"distinct points {pts[i]!r}, {pts[j]!r} at distance 0")
            if d[i][j] != d[j][i]:
                raise NotAMetric(f"asymmetric at ({pts[i]!r}, {pts[j]!r})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if d[i][k] > d[i][j] + d[j][k]:
                    raise NotAMetric(
                        f"triangle inequality fails at ({pts[i]!r}, {pts[j]!r}, {pts[k]!r})"
                    )
    pairs = {
        (pts[i], pts[j]): heaviside(d[i][j])
        for i in range(n)
        for j in range(i + 1, n)
    }
    return PMSpace.from_pairs(pts, tf, pairs)


def canonical_metric(
    space: PMSpace, x: str, y: str, bisect_tol: float = DEFAULT_BISECT_TOL
) -> float:
    """max over all z of the Levy distance between D(x, z) and D(y, z)."""
    space.index(x), space.index(y)
    return max(
        levy_distance(
            space.distribution(x, z), space.distribution(y, z), bisect_tol
        ).value
        for z in space.points
    )


def canonical_metric_matrix(
    space: PMSpace, bisect_tol: float = DEFAULT_BISECT_TOL
) -> list[list[float]]:
    n = len(space.points)
    out = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = canonical_metric(space, space.points[i], space.points[j], bisect_tol)
            out[i][j] = out[j][i] = v
    return out


def lower_matrix(
    space: PMSpace, bisect_tol: float = DEFAULT_BISECT_TOL
) -> list[list[float]]:
    """Levy distance of each D(x, y) from the unit step at 0."""
    n = len(space.points)
    out = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = levy_distance(
                space.distribution(space.points[i], space.points[j]), _UNIT, bisect_tol
            ).value
            out[i][j] = out[j][i] = v
    return out


def strong_neighborhood(space: PMSpace, x: str, t: float) -> tuple[str, ...]:
    """Points y with D(x, y)(t) > 1 - t, in space point order. Exact."""
    t = float(t)
    if math.isnan(t) or t <= 0.0:
        raise NonPositiveT(f"neighborhood radius t must be positive, got {t!r}")
    space.index(x)
    return tuple(
        y for y in space.points if space.distribution(x, y)(t) > 1.0 - t
    )


def neighborhood_matches_ball(
    space: PMSpace, x: str, t: float, bisect_tol: float = DEFAULT_BISECT_TOL
) -> bool | None:
    """Cross-check the strong neighborhood against the metric ball.

    The neighborhood membership D(x, y)(t) > 1 - t is decided exactly; the
    ball membership d(x, y) < t is decided from the bisection bracket. True
    when every point agrees, False when some point certifiably disagrees,
    None (indeterminate) when t falls inside some distance's bracket and
    nothing certifiably disagrees.
    """
    t = float(t)
    if math.isnan(t) or t <= 0.0:
        raise NonPositiveT(f"neighborhood radius t must be positive, got {t!r}")
    members = set(strong_neighborhood(space, x, t))
    indeterminate = False
    for y in space.points:
        res = levy_distance(space.distribution(x, y), _UNIT, bisect_tol)
        lo, hi = res.bracket
        if hi < t:
            in_ball: bool | None = True
        elif lo >= t:
            in_ball = False
        else:
            in_ball = None
        if in_ball is None:
            indeterminate = True
        elif in_ball != (y in members):
            return False
    return None if indeterminate else True


@dataclass(frozen=True)
class MetrizationReport:
    """Sandwich check: lower <= canonical metric <= k * lower, entrywise.

    Matrices are indexed like space.points. tol is the comparison slack,
    three Levy bisection enclosures wide; violations hold
    (x, y, side, lhs, rhs) tuples where side names the failed inequality.
    """

    points: tuple[str, ...]
    k: float
    lower: tuple[tuple[float, ...], ...]
    sigma: tuple[tuple[float, ...], ...]
    tol: float
    violations: tuple[tuple[str, str, str, float, float], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def metrization_report(
    space: PMSpace, bisect_tol: float = DEFAULT_BISECT_TOL
) -> MetrizationReport:
    """Compute both matrices and verify the two-sided sandwich bound."""
    if not validate(space).ok:
        raise InvalidSpace("metrization requires a space that passes validation")
    k = space.tf.lipschitz_k
    tol = 3.0 * bisect_tol
    low = lower_matrix(space, bisect_tol)
    sig = canonical_metric_matrix(space, bisect_tol)
    violations: list[tuple[str, str, str, float, float]] = []
    n = len(space.points)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = space.points[i], space.points[j]
            if low[i][j] > sig[i][j] + tol:
                violations.append((x, y, "lower<=sigma", low[i][j], sig[i][j]))
            if sig[i][j] > k * low[i][j] + tol:
                violations.append((x, y, "sigma<=k*lower", sig[i][j], k * low[i][j]))
    return MetrizationReport(
        points=space.points,
        k=k,
        lower=tuple(tuple(r) for r in low),
        sigma=tuple(tuple(r) for r in sig),
        tol=tol,
        violations=tuple(violations),
    )
