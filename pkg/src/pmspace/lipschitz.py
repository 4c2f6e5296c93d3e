"""Probabilistic 1-Lipschitz maps and certified contraction fixed points.

A map f from points to distributions is probabilistic 1-Lipschitz when
D(x, y) * f(y) <= f(x) for every ordered pair, under the space's triangle
function. The distance-to-a-point maps are the canonical examples; the
envelope construction turns arbitrary data on a subset into a 1-Lipschitz
map and fixes 1-Lipschitz inputs.

A self-map m is a contraction with factor q in (0, 1) when
d(m(x), m(y)) <= q d(x, y) for the Levy distance of each pair distribution
from the unit step; iterating m from any start then reaches the unique
fixed point with certified error bounds k (kq)^n / (1 - kq) times the first
step's distance, provided kq < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .distributions import Distribution, pointwise_max
from .errors import (
    EmptySubset,
    KQTooLarge,
    MissingPoint,
    NoConvergence,
    NotContraction,
    NotLipschitz,
    QOutOfRange,
    UnknownPoint,
    UnsupportedTriangleFn,
)
from .levy import DEFAULT_BISECT_TOL, LevyResult, levy_distance
from .spaces import PMSpace, _UNIT
from .triangle import Kind

DEFAULT_ASSERT_TOL = 1e-9

__all__ = [
    "DEFAULT_ASSERT_TOL",
    "ProbLipMap",
    "SelfMap",
    "Lip1Report",
    "check_one_lipschitz",
    "distance_map",
    "uniform_distance",
    "lipschitz_envelope",
    "EquicontinuityReport",
    "check_equicontinuity",
    "ContractionCheck",
    "is_contraction",
    "FixpointCertificate",
    "solve_fixpoint",
    "check_limit_closure",
]


@dataclass(frozen=True)
class ProbLipMap:
    """Point-indexed distributions, stored sorted by label for canonical
    equality."""

    labels: tuple[str, ...]
    dists: tuple[Distribution, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        if len(labels) != len(self.dists):
            raise MissingPoint("labels and distributions differ in length")
        if len(set(labels)) != len(labels):
            raise MissingPoint("duplicate labels in map")
        order = sorted(range(len(labels)), key=lambda i: labels[i])
        object.__setattr__(self, "labels", tuple(labels[i] for i in order))
        object.__setattr__(self, "dists", tuple(self.dists[i] for i in order))

    @classmethod
    def from_dict(cls, values: Mapping[str, Distribution]) -> "ProbLipMap":
        items = list(values.items())
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items))

    def at(self, label: str) -> Distribution:
        try:
            return self.dists[self.labels.index(label)]
        except ValueError:
            raise MissingPoint(f"map has no value for point {label!r}") from None

    def as_dict(self) -> dict[str, Distribution]:
        return dict(zip(self.labels, self.dists))


@dataclass(frozen=True)
class SelfMap:
    """Point-to-point map, stored sorted by source label."""

    labels: tuple[str, ...]
    images: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        images = tuple(str(x) for x in self.images)
        if len(labels) != len(images):
            raise MissingPoint("labels and images differ in length")
        if len(set(labels)) != len(labels):
            raise MissingPoint("duplicate labels in self-map")
        order = sorted(range(len(labels)), key=lambda i: labels[i])
        object.__setattr__(self, "labels", tuple(labels[i] for i in order))
        object.__setattr__(self, "images", tuple(images[i] for i in order))

    @classmethod
    def from_dict(cls, mapping: Mapping[str, str]) -> "SelfMap":
        items = list(mapping.items())
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items))

    def at(self, label: str) -> str:
        try:
            return self.images[self.labels.index(label)]
        except ValueError:
            raise MissingPoint(f"self-map has no image for point {label!r}") from None


def _require_total(space: PMSpace, f: ProbLipMap) -> None:
    for p in space.points:
        if p not in f.labels:
            raise MissingPoint(f"map has no value for point {p!r}")


def _require_self_map(space: PMSpace, m: SelfMap) -> None:
    for p in space.points:
        if p not in m.labels:
            raise MissingPoint(f"self-map has no image for point {p!r}")
    for img in m.images:
        if img not in space.points:
            raise UnknownPoint(f"self-map image {img!r} is not a point of the space")


@dataclass(frozen=True)
class Lip1Report:
    """Ordered pairs (x, y) where D(x, y) * f(y) <= f(x) fails."""

    violations: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_one_lipschitz(space: PMSpace, f: ProbLipMap) -> Lip1Report:
    """Exhaustive exact check of the defining inequality on ordered pairs."""
    _require_total(space, f)
    violations: list[tuple[str, str]] = []
    for x in space.points:
        fx = f.at(x)
        for y in space.points:
            combined = space.tf(space.distribution(x, y), f.at(y))
            if not combined <= fx:
                violations.append((x, y))
    return Lip1Report(violations=tuple(violations))


def distance_map(space: PMSpace, x: str) -> ProbLipMap:
    """The map y -> D(y, x); 1-Lipschitz by the triangle inequality."""
    space.index(x)
    return ProbLipMap(
        labels=space.points,
        dists=tuple(space.distribution(y, x) for y in space.points),
    )


def uniform_distance(
    f: ProbLipMap, g: ProbLipMap, bisect_tol: float = DEFAULT_BISECT_TOL
) -> float:
    """max over points of the Levy distance between f and g values."""
    if f.labels != g.labels:
        raise MissingPoint("uniform distance needs maps over the same point set")
    return max(
        levy_distance(df, dg, bisect_tol).value for df, dg in zip(f.dists, g.dists)
    )


def lipschitz_envelope(
    space: PMSpace,
    data: ProbLipMap,
    subset: Sequence[str] | None = None,
) -> ProbLipMap:
    """Pointwise max over y in the subset of data(y) * D(x, y).

    The result is 1-Lipschitz whenever the triangle function distributes
    over finite pointwise maxima, which the sum and max kinds do (T is
    monotone and the sup formulas commute with finite max); other kinds are
    rejected. data must cover the subset; the result covers every point.
    A 1-Lipschitz input with the full point set as subset is a fixed point
    of the construction.
    """
    if space.tf.kind not in (Kind.SUM, Kind.MAX):
        raise UnsupportedTriangleFn(
            f"envelope needs the sum or max kind, got {space.tf.kind.value!r}"
        )
    if subset is None:
        subset = space.points
    subset = tuple(subset)
    if not subset:
        raise EmptySubset("envelope needs a nonempty subset")
    for y in subset:
        space.index(y)
    if len(set(subset)) != len(subset):
        raise EmptySubset("subset labels must be distinct")
    for y in subset:
        data.at(y)
    out: list[Distribution] = []
    for x in space.points:
        terms = [
            space.tf(data.at(y), space.distribution(x, y)) for y in subset
        ]
        out.append(pointwise_max(terms))
    return ProbLipMap(labels=space.points, dists=tuple(out))


@dataclass(frozen=True)
class EquicontinuityReport:
    """Violations (map index, x, y, lhs, rhs) of d(f(x), f(y)) <= k d(x, y)."""

    violations: tuple[tuple[int, str, str, float, float], ...]
    maps_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def check_equicontinuity(
    space: PMSpace,
    fs: Sequence[ProbLipMap],
    tol: float = DEFAULT_ASSERT_TOL,
    bisect_tol: float = DEFAULT_BISECT_TOL,
) -> EquicontinuityReport:
    """Shared modulus check for a family of 1-Lipschitz maps.

    Every map must pass the 1-Lipschitz check first (NotLipschitz
    otherwise); then d(f(x), f(y)) <= k d(x, y) + tol is checked for every
    map and unordered pair, with d(x, y) the Levy distance of D(x, y) from
    the unit step.
    """
    for idx, f in enumerate(fs):
        if not check_one_lipschitz(space, f).ok:
            raise NotLipschitz(f"family member {idx} is not 1-Lipschitz")
    k = space.tf.lipschitz_k
    violations: list[tuple[int, str, str, float, float]] = []
    pairs = [
        (x, y, levy_distance(space.distribution(x, y), _UNIT, bisect_tol).value)
        for x, y in space.pair_list()
    ]
    for idx, f in enumerate(fs):
        for x, y, dxy in pairs:
            lhs = levy_distance(f.at(x), f.at(y), bisect_tol).value
            rhs = k * dxy
            if lhs > rhs + tol:
                violations.append((idx, x, y, lhs, rhs))
    return EquicontinuityReport(violations=tuple(violations), maps_checked=len(fs))


@dataclass(frozen=True)
class ContractionCheck:
    """Outcome of the contraction test with enclosure-aware comparisons."""

    ok: bool
    witness: tuple[str, str] | None
    indeterminate_pairs: int


def _certified_leq(lhs: LevyResult, bound_lo: float, bound_hi: float) -> bool | None:
    # lhs_true in [lhs.lo, lhs.hi]; bound_true in [bound_lo, bound_hi]
    lo, hi = lhs.bracket
    if hi <= bound_lo:
        return True
    if lo > bound_hi:
        return False
    return None


def is_contraction(
    space: PMSpace,
    m: SelfMap,
    q: float,
    bisect_tol: float = DEFAULT_BISECT_TOL,
) -> ContractionCheck:
    """Check d(m(x), m(y)) <= q d(x, y) on all pairs of distinct points.

    Each side is a bisection enclosure. A pair whose comparison straddles
    the enclosures is retried once at bisect_tol / 100; if it still
    straddles, it is counted as indeterminate and treated as passing (the
    two sides agree to within the tightened enclosure), so only certified
    violations produce a negative verdict.
    """
    q = float(q)
    if math.isnan(q) or not 0.0 < q < 1.0:
        raise QOutOfRange(f"contraction factor q must lie in (0, 1), got {q!r}")
    _require_self_map(space, m)
    indeterminate = 0
    for x, y in space.pair_list():
        for tol in (bisect_tol, bisect_tol / 100.0):
            lhs = levy_distance(
                space.distribution(m.at(x), m.at(y)), _UNIT, tol
            )
            rhs = levy_distance(space.distribution(x, y), _UNIT, tol)
            verdict = _certified_leq(lhs, q * rhs.bracket[0], q * rhs.bracket[1])
            if verdict is True:
                break
            if verdict is False and tol != bisect_tol:
                return ContractionCheck(ok=False, witness=(x, y), indeterminate_pairs=indeterminate)
            if verdict is None and tol != bisect_tol:
                indeterminate += 1
    return ContractionCheck(ok=True, witness=None, indeterminate_pairs=indeterminate)


@dataclass(frozen=True)
class FixpointCertificate:
    """Iteration trace with certified rate bounds.

    iterates[0] is the start and iterates[-1] the fixed point; bounds[n] is
    k (kq)^n / (1 - kq) times the first step's distance and achieved[n] the
    Levy distance of D(iterates[n], fixed point) from the unit step. ok
    records achieved[n] <= bounds[n] + tol at every step, with unique_fixed
    confirmed by exhaustive scan.
    """

    fixed_point: str
    iterates: tuple[str, ...]
    bounds: tuple[float, ...]
    achieved: tuple[float, ...]
    q: float
    k: float
    tol: float
    unique_fixed: bool

    @property
    def ok(self) -> bool:
        return self.unique_fixed and all(
            a <= b + self.tol for a, b in zip(self.achieved, self.bounds)
        )


def solve_fixpoint(
    space: PMSpace,
    m: SelfMap,
    q: float,
    x0: str,
    max_iter: int = 64,
    assert_tol: float = DEFAULT_ASSERT_TOL,
    bisect_tol: float = DEFAULT_BISECT_TOL,
) -> FixpointCertificate:
    """Iterate a certified contraction to its unique fixed point.

    Requires kq < 1 (KQTooLarge otherwise) and a passing contraction check
    (NotContraction with the witness pair otherwise). On a finite space a
    contraction must cycle into its fixed point within the number of
    points, so exhausting max_iter raises NoConvergence, which on valid
    inputs indicates a broken precondition. After convergence every point
    is scanned; a second fixed point raises NotContraction.
    """
    q = float(q)
    if math.isnan(q) or not 0.0 < q < 1.0:
        raise QOutOfRange(f"contraction factor q must lie in (0, 1), got {q!r}")
    space.index(x0)
    k = space.tf.lipschitz_k
    if k * q >= 1.0:
        raise KQTooLarge(f"certified rate needs k*q < 1, got k={k!r}, q={q!r}")
    check = is_contraction(space, m, q, bisect_tol)
    if not check.ok:
        raise NotContraction(
            f"not a q={q!r} contraction at pair {check.witness!r}", witness=check.witness
        )
    iterates = [x0]
    for _ in range(max_iter):
        nxt = m.at(iterates[-1])
        if nxt == iterates[-1]:
            break
        iterates.append(nxt)
    else:
        raise NoConvergence(f"no fixed point reached within {max_iter} iterations")
    if m.at(iterates[-1]) != iterates[-1]:
        raise NoConvergence(f"no fixed point reached within {max_iter} iterations")
    star = iterates[-1]
    for p in space.points:
        if p != star and m.at(p) == p:
            raise NotContraction(
                f"two distinct fixed points {star!r} and {p!r}", witness=(star, p)
            )
    d1 = levy_distance(
        space.distribution(iterates[1] if len(iterates) > 1 else x0, x0),
        _UNIT,
        bisect_tol,
    ).value
    rate = k * q
    bounds = tuple(k * rate**n / (1.0 - rate) * d1 for n in range(len(iterates)))
    achieved = tuple(
        levy_distance(space.distribution(xn, star), _UNIT, bisect_tol).value
        for xn in iterates
    )
    return FixpointCertificate(
        fixed_point=star,
        iterates=tuple(iterates),
        bounds=bounds,
        achieved=achieved,
        q=q,
        k=k,
        tol=assert_tol,
        unique_fixed=True,
    )


def check_limit_closure(
    space: PMSpace,
    fs: Sequence[ProbLipMap],
    f: ProbLipMap,
    tol: float = 0.05,
    bisect_tol: float = DEFAULT_BISECT_TOL,
) -> bool:
    """1-Lipschitz closure under uniform limits, on a finite prefix.

    Every prefix element must itself pass the 1-Lipschitz check
    (NotLipschitz otherwise, so an adversarial prefix is rejected at the
    precondition rather than reported as a closure failure), and the prefix
    must have converged: last uniform distance below tol (ValueError
    otherwise, a caller contract). Returns whether the limit candidate
    passes the 1-Lipschitz check.
    """
    if not fs:
        raise ValueError("check_limit_closure needs a nonempty prefix")
    for idx, fn in enumerate(fs):
        if not check_one_lipschitz(space, fn).ok:
            raise NotLipschitz(f"prefix member {idx} is not 1-Lipschitz")
    last = uniform_distance(fs[-1], f, bisect_tol)
    if last >= tol:
        raise ValueError(
            f"prefix has not converged: last uniform distance {last!r} >= tol {tol!r}"
        )
    return check_one_lipschitz(space, f).ok
