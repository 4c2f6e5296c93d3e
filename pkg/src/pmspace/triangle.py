"""Triangle functions built from t-norms, with exact step-function kernels.

A triangle function combines two step distributions into a third; the four
constructions here are the sup-convolution over u+v=t (sum), the sup over
max(u,v)=t (max), the inf-convolution of the dual t-conorm over u+v=s
(conorm), and the pointwise application of the t-norm. All four are
commutative, associative, have the unit step at 0 as neutral element, and
are monotone in each argument; each is k-Lipschitz for the modified Levy
metric with k the Lipschitz modulus of the t-norm (1 for all built-ins).

The exact constructions run through the selected backend kernels; the grid
oracle in this module is an independent brute force of the defining formulas
over a uniform grid, used to validate the exact corner rules. Its error is
O(t_max/grid) in argument and bounded by the t-norm modulus in value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from . import _backend
from .distributions import Distribution, heaviside, pointwise_max
from .errors import OutOfRange
from .levy import levy_distance

DEFAULT_ORACLE_GRID = 2048

__all__ = [
    "DEFAULT_ORACLE_GRID",
    "TNorm",
    "Kind",
    "TriangleFunction",
    "tnorm_eval",
    "tconorm_eval",
    "grid_brute_force",
    "OracleReport",
    "oracle_check",
    "AxiomReport",
    "check_axioms",
    "LipschitzReport",
    "check_lipschitz_bound",
]


class TNorm(Enum):
    """Built-in t-norms; all three are 1-Lipschitz in each argument."""

    MINIMUM = "min"
    PRODUCT = "prod"
    LUKASIEWICZ = "luk"

    @property
    def lipschitz_k(self) -> float:
        return 1.0

    @property
    def kernel_id(self) -> int:
        return {"min": 0, "prod": 1, "luk": 2}[self.value]


class Kind(Enum):
    """Closed enum of the four constructions."""

    SUM = "sum"
    MAX = "max"
    CONORM = "conorm"
    POINTWISE = "pointwise"


def _check_unit(name: str, x: float) -> float:
    x = float(x)
    if math.isnan(x) or not 0.0 <= x <= 1.0:
        raise OutOfRange(f"{name} must lie in [0, 1], got {x!r}")
    return x


def tnorm_eval(t: TNorm, x: float, y: float) -> float:
    """T(x, y) on [0,1]^2; boundary identities T(x,1)=x, T(x,0)=0 are exact."""
    x = _check_unit("x", x)
    y = _check_unit("y", y)
    return _backend.kernels.tnorm(t.kernel_id, x, y)


def tconorm_eval(t: TNorm, x: float, y: float) -> float:
    """Dual t-conorm T*(x, y) = 1 - T(1-x, 1-y), with exact 0/1 boundaries."""
    x = _check_unit("x", x)
    y = _check_unit("y", y)
    return _backend.kernels.tconorm(t.kernel_id, x, y)


@dataclass(frozen=True)
class TriangleFunction:
    """A construction kind plus its t-norm; callable on two distributions.

    lipschitz_k defaults to the t-norm's modulus (1 for the built-ins); a
    larger stored value is still a valid certified modulus and only loosens
    the rates derived from it.
    """

    kind: Kind
    tnorm: TNorm
    lipschitz_k: float = 0.0

    def __post_init__(self) -> None:
        k = float(self.lipschitz_k)
        if k == 0.0:
            k = self.tnorm.lipschitz_k
        if math.isnan(k) or k < 1.0:
            raise OutOfRange(f"lipschitz_k must be >= 1, got {self.lipschitz_k!r}")
        object.__setattr__(self, "lipschitz_k", k)

    def __call__(self, f: Distribution, g: Distribution) -> Distribution:
        op = self.tnorm.kernel_id
        kern = _backend.kernels
        if self.kind is Kind.SUM:
            locs, levels = kern.star_sum(f.locs, f.levels, g.locs, g.levels, op)
        elif self.kind is Kind.CONORM:
            locs, levels = kern.star_conorm(f.locs, f.levels, g.locs, g.levels, op)
        else:
            # max and pointwise share one kernel: the sup over max(u,v)=t
            # collapses to T(F(t), G(t)) since T is monotone.
            locs, levels = kern.star_pointwise(f.locs, f.levels, g.locs, g.levels, op)
        return Distribution(tuple(locs), tuple(levels))


# --- independent grid oracle -------------------------------------------------


def _eval_on_grid(f: Distribution, ts: np.ndarray) -> np.ndarray:
    # Left-continuous evaluation via searchsorted: count of locations
    # strictly below each t indexes a level array prefixed with 0.
    locs = np.asarray(f.locs, dtype=np.float64)
    levels = np.concatenate(([0.0], np.asarray(f.levels, dtype=np.float64)))
    return levels[np.searchsorted(locs, ts, side="left")]


def _np_tnorm(t: TNorm, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if t is TNorm.MINIMUM:
        return np.minimum(x, y)
    if t is TNorm.PRODUCT:
        return x * y
    return np.maximum(x + y - 1.0, 0.0)


def _np_tconorm(t: TNorm, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return 1.0 - _np_tnorm(t, 1.0 - x, 1.0 - y)


def grid_brute_force(
    tf: TriangleFunction,
    f: Distribution,
    g: Distribution,
    grid: int = DEFAULT_ORACLE_GRID,
    t_max: float | None = None,
) -> Distribution:
    """Brute-force the defining sup/inf of tf over a uniform grid.

    Used only as a test oracle for the exact constructions. The grid spans
    [0, t_max] with `grid` cells (t_max defaults to the sum of the inputs'
    largest jump locations plus 1); for each grid point the defining formula
    is evaluated over all grid decompositions, with no corner rule assumed.
    The returned step function deviates from the exact result by O(t_max/grid)
    in argument; its levels come from the same t-norm arithmetic, so the
    value error through a jump-free window is bounded by the t-norm modulus
    times the argument error.
    """
    grid = int(grid)
    if grid < 2:
        raise OutOfRange(f"grid must be >= 2, got {grid}")
    if t_max is None:
        t_max = f.max_loc() + g.max_loc() + 1.0
    t_max = float(t_max)
    if not t_max > 0.0:
        raise OutOfRange(f"t_max must be positive, got {t_max!r}")
    ts = np.linspace(0.0, t_max, grid + 1)
    fv = _eval_on_grid(f, ts)
    gv = _eval_on_grid(g, ts)
    n = grid  # index of the last grid point

    if tf.kind is Kind.POINTWISE:
        vals = _np_tnorm(tf.tnorm, fv, gv)
    elif tf.kind is Kind.MAX:
        m = _np_tnorm(tf.tnorm, fv[:, None], gv[None, :])
        # max over the L-shaped set (i <= k, j = k) u (i = k, j <= k),
        # folding rows so run[j] = max over i <= k of m[i, j]
        vals = np.empty(n + 1)
        run = np.full(n + 1, -np.inf)
        for k in range(n + 1):
            row = m[k]
            np.maximum(run, row, out=run)
            vals[k] = max(run[k], row[: k + 1].max())
    elif tf.kind is Kind.SUM:
        m = _np_tnorm(tf.tnorm, fv[:, None], gv[None, :])
        # vals[k] = max over the anti-diagonal i + j = k, folded row by row
        vals = np.full(n + 1, -np.inf)
        for i in range(n + 1):
            np.maximum(vals[i:], m[i, : n + 1 - i], out=vals[i:])
    else:
        m = _np_tconorm(tf.tnorm, fv[:, None], gv[None, :])
        vals = np.full(n + 1, np.inf)
        for i in range(n + 1):
            np.minimum(vals[i:], m[i, : n + 1 - i], out=vals[i:])

    out_l: list[float] = []
    out_v: list[float] = []
    best = 0.0
    for k in range(n + 1):
        v = float(vals[k])
        if v > best:
            out_l.append(float(ts[k]))
            out_v.append(v)
            best = v
    return Distribution(tuple(out_l), tuple(out_v))


@dataclass(frozen=True)
class OracleReport:
    """Containment of the grid oracle between shifted exact evaluations.

    At each midpoint m between grid nodes the oracle value must lie in
    [exact(m - 3d) - slack, exact(m + 3d+) + slack] with d the grid spacing
    and + the right limit: the oracle can misplace a jump by a cell or two
    but never invent or lose mass. violations holds (midpoint, lower,
    oracle, upper) rows.
    """

    violations: tuple[tuple[float, float, float, float], ...]
    grid: int

    @property
    def ok(self) -> bool:
        return not self.violations


def oracle_check(
    tf: TriangleFunction,
    f: Distribution,
    g: Distribution,
    grid: int = DEFAULT_ORACLE_GRID,
    t_max: float | None = None,
    slack: float = 1e-12,
) -> OracleReport:
    """Cross-check the exact construction against the grid oracle."""
    exact = tf(f, g)
    oracle = grid_brute_force(tf, f, g, grid, t_max)
    if t_max is None:
        t_max = f.max_loc() + g.max_loc() + 1.0
    t_max = float(t_max)
    grid = int(grid)
    step = t_max / grid
    bad: list[tuple[float, float, float, float]] = []
    for k in range(grid):
        m = (k + 0.5) * step
        got = oracle(m)
        lo = exact(m - 3.0 * step) - slack
        hi = exact.right_limit(m + 3.0 * step) + slack
        if not lo <= got <= hi:
            bad.append((m, lo, got, hi))
    return OracleReport(violations=tuple(bad), grid=grid)


# --- axiom and Lipschitz checkers --------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """First counterexample per axiom over the supplied sample triples.

    Axiom keys: commutative, associative, neutral, monotone. Closure holds
    by construction (every result passes canonical validation), so it has
    no entry. ok is True iff no axiom found a counterexample.
    """

    violations: tuple[tuple[str, int, str], ...]
    samples_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def check_axioms(
    tf: TriangleFunction,
    samples: Sequence[tuple[Distribution, Distribution, Distribution]],
    star_impl: Callable[[TriangleFunction, Distribution, Distribution], Distribution]
    | None = None,
) -> AxiomReport:
    """Check the triangle-function axioms on sample triples, exactly.

    Equalities are canonical-form equalities and the order is the exact
    pointwise order, so on inputs whose locations and levels are closed
    under the t-norm arithmetic (dyadic lattices, for instance) a
    mathematically true axiom can never produce a spurious counterexample.
    star_impl allows injecting a broken operation for negative controls;
    monotonicity is exercised against the least upper bound of the first
    two components, which makes every sample usable.
    """
    op = star_impl if star_impl is not None else (lambda t, a, b: t(a, b))
    unit = heaviside(0.0)
    found: dict[str, tuple[str, int, str]] = {}

    def note(axiom: str, idx: int, msg: str) -> None:
        if axiom not in found:
            found[axiom] = (axiom, idx, msg)

    for idx, (f, g, k) in enumerate(samples):
        fg = op(tf, f, g)
        if "commutative" not in found and fg != op(tf, g, f):
            note("commutative", idx, "star(F,G) != star(G,F)")
        if "associative" not in found and op(tf, fg, k) != op(tf, f, op(tf, g, k)):
            note("associative", idx, "star(star(F,G),K) != star(F,star(G,K))")
        if "neutral" not in found and op(tf, f, unit) != f:
            note("neutral", idx, "star(F, unit step at 0) != F")
        if "monotone" not in found:
            upper = pointwise_max([f, g])
            if not op(tf, f, k) <= op(tf, upper, k):
                note("monotone", idx, "F <= max(F,G) but star(F,K) !<= star(max(F,G),K)")
    order = ("commutative", "associative", "neutral", "monotone")
    violations = tuple(found[a] for a in order if a in found)
    return AxiomReport(violations=violations, samples_checked=len(samples))


@dataclass(frozen=True)
class LipschitzReport:
    """Outcome of the k-Lipschitz bound check over sample quadruples."""

    violations: tuple[tuple[int, float, float], ...]
    max_ratio: float
    samples_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def check_lipschitz_bound(
    tf: TriangleFunction,
    samples: Sequence[
        tuple[Distribution, Distribution, Distribution, Distribution]
    ],
    tol: float = 1e-9,
    bisect_tol: float = 1e-12,
) -> LipschitzReport:
    """Check d(F*G, F'*G') <= k (d(F,F') + d(G,G')) on sample quadruples.

    Distances are bracket midpoints, so tol should dominate a few bisection
    widths. max_ratio reports the largest observed lhs/(d(F,F') + d(G,G'))
    over samples with a positive denominator.
    """
    k = tf.lipschitz_k
    violations: list[tuple[int, float, float]] = []
    max_ratio = 0.0
    for idx, (f, f2, g, g2) in enumerate(samples):
        lhs = levy_distance(tf(f, g), tf(f2, g2), bisect_tol).value
        d1 = levy_distance(f, f2, bisect_tol).value
        d2 = levy_distance(g, g2, bisect_tol).value
        rhs = k * (d1 + d2)
        if lhs > rhs + tol:
            violations.append((idx, lhs, rhs))
        if d1 + d2 > 0.0:
            max_ratio = max(max_ratio, lhs / (d1 + d2))
    return LipschitzReport(
        violations=tuple(violations), max_ratio=max_ratio, samples_checked=len(samples)
    )
