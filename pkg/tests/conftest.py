"""Shared generators.

Random objects live on a dyadic lattice: jump locations are multiples of
1/8 (kept small) and levels multiples of 1/64. On that lattice the float
arithmetic the kernels perform (sums of locations, products and affine
combinations of levels) is exact, so algebraic laws can be asserted with
canonical equality instead of tolerances. Metrics are closed under
Floyd-Warshall with dyadic weights for the same reason.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pmspace import (
    Distribution,
    Kind,
    PMSpace,
    ProbLipMap,
    SelfMap,
    TNorm,
    TriangleFunction,
    induced_from_metric,
    make_step,
)

LOC_GRID = [k / 8 for k in range(0, 41)]  # 0 .. 5 in steps of 1/8
LEVEL_GRID = [j / 64 for j in range(1, 65)]  # 1/64 .. 1


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)


def dyadic_dist(
    rng: random.Random, max_jumps: int = 6, allow_empty: bool = True
) -> Distribution:
    lo = 0 if allow_empty else 1
    n = rng.randint(lo, max_jumps)
    locs = sorted(rng.sample(LOC_GRID, n))
    levels = sorted(rng.sample(LEVEL_GRID, n))
    return Distribution(tuple(locs), tuple(levels))


def dyadic_dists(max_jumps: int = 5) -> st.SearchStrategy[Distribution]:
    def build(locs: list[float], levels: list[float]) -> Distribution:
        n = min(len(locs), len(levels))
        return Distribution(tuple(sorted(locs)[:n]), tuple(sorted(levels)[:n]))

    return st.builds(
        build,
        st.lists(st.sampled_from(LOC_GRID), unique=True, max_size=max_jumps),
        st.lists(st.sampled_from(LEVEL_GRID), unique=True, max_size=max_jumps),
    )


def dyadic_metric(rng: random.Random, n: int) -> list[list[float]]:
    """Random exact metric: dyadic symmetric weights, shortest-path closed.

    Weights are multiples of 1/8 in [1/8, 2]; path sums stay dyadic and
    small, so every comparison the validators make is exact.
    """
    d = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.randint(1, 16) / 8
            d[i][j] = d[j][i] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = d[i][k] + d[k][j]
                if via < d[i][j]:
                    d[i][j] = via
    return d


def ultrametric(rng: random.Random, n: int) -> list[list[float]]:
    """Random ultrametric via a merge tree with increasing dyadic heights."""
    d = [[0.0] * n for _ in range(n)]
    clusters = [[i] for i in range(n)]
    height = 0.0
    while len(clusters) > 1:
        height += rng.randint(1, 4) / 8
        a = clusters.pop(rng.randrange(len(clusters)))
        b = clusters.pop(rng.randrange(len(clusters)))
        for i in a:
            for j in b:
                d[i][j] = d[j][i] = height
        clusters.append(a + b)
    return d


def _labels(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(n))


def induced_space(rng: random.Random, n: int, tnorm: TNorm = TNorm.MINIMUM) -> PMSpace:
    tf = TriangleFunction(kind=Kind.SUM, tnorm=tnorm)
    metric = dyadic_metric(rng, n)
    return induced_from_metric(_labels(n), metric, tf)


def simple_space(rng: random.Random, n: int, tnorm: TNorm) -> PMSpace:
    """Menger space D(x, y)(t) = G0(t / d(x, y)) over an exact metric.

    Valid for the sum kind under any t-norm: a result jump T(p_i, p_j) of
    D(x,y) * D(y,z) sits at location a u_i + b u_j >= (a + b) u_min(i,j)
    >= c u_min(i,j), where the target already has level p_min(i,j) >=
    T(p_i, p_j). Generator locations stay strictly positive so no
    off-diagonal distance collapses to the unit step.
    """
    k = rng.randint(1, 4)
    locs = sorted(rng.sample(LOC_GRID[1:17], k))  # in [1/8, 2]
    levels = sorted(rng.sample(LEVEL_GRID, k))
    g0 = Distribution(tuple(locs), tuple(levels))
    metric = dyadic_metric(rng, n)
    tf = TriangleFunction(kind=Kind.SUM, tnorm=tnorm)
    labels = _labels(n)
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            d = metric[i][j]
            pairs[(labels[i], labels[j])] = Distribution(
                tuple(u * d for u in g0.locs), g0.levels
            )
    return PMSpace.from_pairs(labels, tf, pairs)


def ultra_space(rng: random.Random, n: int, tnorm: TNorm, kind: Kind = Kind.MAX) -> PMSpace:
    """Space over an ultrametric, valid for the max and pointwise kinds.

    T(F(t), G(t)) <= min(F(t), G(t)) = G0(t / max(a, b)) <= G0(t / c) when
    c <= max(a, b), which is the ultrametric inequality.
    """
    assert kind in (Kind.MAX, Kind.POINTWISE)
    k = rng.randint(1, 4)
    locs = sorted(rng.sample(LOC_GRID[1:17], k))
    levels = sorted(rng.sample(LEVEL_GRID, k))
    metric = ultrametric(rng, n)
    tf = TriangleFunction(kind=kind, tnorm=tnorm)
    labels = _labels(n)
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            d = metric[i][j]
            pairs[(labels[i], labels[j])] = Distribution(
                tuple(u * d for u in locs), tuple(levels)
            )
    return PMSpace.from_pairs(labels, tf, pairs)


def random_valid_space(rng: random.Random, n: int) -> PMSpace:
    kind = rng.choice(["induced", "simple", "ultra"])
    if kind == "induced":
        return induced_space(rng, n, rng.choice(list(TNorm)))
    if kind == "simple":
        return simple_space(rng, n, rng.choice(list(TNorm)))
    return ultra_space(
        rng, n, rng.choice(list(TNorm)), rng.choice([Kind.MAX, Kind.POINTWISE])
    )


def random_data_map(rng: random.Random, space: PMSpace) -> ProbLipMap:
    return ProbLipMap(
        labels=space.points,
        dists=tuple(dyadic_dist(rng, 4, allow_empty=False) for _ in space.points),
    )


def planted_contraction(
    rng: random.Random, q: Fraction, chain: int
) -> tuple[PMSpace, SelfMap, float, str, str]:
    """Line-embedded contraction with exact ratio q, clamped at the bottom.

    Points sit at coordinates s q^j for j = 0..chain; the self-map shifts
    one step down and fixes the bottom point. Chain pairs contract by
    exactly q in float arithmetic (dyadic coordinates, exact differences);
    pairs involving the bottom contract strictly faster. chain must stay
    small enough that q**chain is dyadic-exact (3**chain fits easily).
    """
    s = rng.randint(32, 64) / 64
    coords = [s * float(q**j) for j in range(chain + 1)]
    labels = tuple(f"c{j}" for j in range(chain + 1))
    n = len(coords)
    metric = [[abs(coords[i] - coords[j]) for j in range(n)] for i in range(n)]
    tf = TriangleFunction(kind=Kind.SUM, tnorm=TNorm.MINIMUM)
    space = induced_from_metric(labels, metric, tf)
    images = {labels[j]: labels[min(j + 1, chain)] for j in range(chain + 1)}
    return space, SelfMap.from_dict(images), float(q), "c0", labels[chain]


def halving_instance() -> tuple[PMSpace, SelfMap, float, str, str]:
    """Seven dyadic points 2^-j on the line; the map halves, clamped at the
    smallest point, which is the unique fixed point."""
    coords = [2.0**-j for j in range(7)]
    labels = tuple(f"x{j}" for j in range(7))
    metric = [[abs(a - b) for b in coords] for a in coords]
    tf = TriangleFunction(kind=Kind.SUM, tnorm=TNorm.MINIMUM)
    space = induced_from_metric(labels, metric, tf)
    images = {labels[j]: labels[min(j + 1, 6)] for j in range(7)}
    return space, SelfMap.from_dict(images), 0.5, "x0", "x6"
