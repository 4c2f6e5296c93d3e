"""Pure-Python computational kernels.

Reference implementations of the hot inner loops: step-function evaluation,
the pointwise order, the per-h admissibility decision with its bisection, and
the exact triangle-function constructions. `pmspace._backend` swaps in the
compiled versions when available. Both backends implement the same signatures
over plain float sequences and must return bit-identical results, so keep the
order of floating-point operations in sync with `_kernels_cy.pyx`.

A distribution is passed as two parallel sequences `locs`, `levels` with
strictly increasing locations >= 0 and strictly increasing levels in (0, 1].
Its value at t is max{levels[i] : locs[i] < t} (0 if none), which is
left-continuous and nondecreasing; the value at +inf is 1 by convention and
is handled by callers, not here.

t-norm ids: 0 = minimum, 1 = product, 2 = lukasiewicz.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

_INF = float("inf")


def tnorm(op: int, x: float, y: float) -> float:
    # Boundary identities are enforced exactly: x+1.0-1.0 != x for general
    # binary64 x, which would silently break the exact neutral element.
    if op == 0:
        return x if x <= y else y
    if op == 1:
        return x * y
    if x == 1.0:
        return y
    if y == 1.0:
        return x
    s = x + y - 1.0
    return s if s > 0.0 else 0.0


def tconorm(op: int, x: float, y: float) -> float:
    # Dual of tnorm; the 0/1 boundaries are enforced exactly because
    # 1.0-(1.0-x) != x for general binary64 x.
    if x == 0.0:
        return y
    if y == 0.0:
        return x
    if x == 1.0 or y == 1.0:
        return 1.0
    return 1.0 - tnorm(op, 1.0 - x, 1.0 - y)


def eval_left(locs, levels, t: float) -> float:
    i = bisect_left(locs, t)
    return levels[i - 1] if i > 0 else 0.0


def eval_right(locs, levels, t: float) -> float:
    i = bisect_right(locs, t)
    return levels[i - 1] if i > 0 else 0.0


def leq(lf, vf, lg, vg) -> bool:
    """Exact decision of F(t) <= G(t) for all t.

    Both sides are constant on the intervals cut by the union of jump
    locations and left-continuous at the cuts, so comparing right limits at
    every jump location of either side decides the order exactly.
    """
    for c in lf:
        if eval_right(lf, vf, c) > eval_right(lg, vg, c):
            return False
    for c in lg:
        if eval_right(lf, vf, c) > eval_right(lg, vg, c):
            return False
    return True


def _half_admissible(lf, vf, lg, vg, h: float) -> bool:
    """Decide sup_{t in [0, 1/h)} [G(t) - F(t+h)] <= h exactly.

    t -> G(t) - F(t+h) is piecewise constant with pieces opening at 0, at
    the locations of G, and at the locations of F shifted by -h; its value
    on a piece opening at p is eval_right(G, p) - eval_right(F, p+h).
    For the F-shifted candidates the F side is read off by index, which
    avoids the (a - h) + h round trip entirely.
    """
    upper = 1.0 / h
    if eval_right(lg, vg, 0.0) > eval_right(lf, vf, h) + h:
        return False
    for b in lg:
        if 0.0 < b < upper:
            if eval_right(lg, vg, b) > eval_right(lf, vf, b + h) + h:
                return False
    for i, a in enumerate(lf):
        p = a - h
        if 0.0 < p < upper:
            if eval_right(lg, vg, p) > vf[i] + h:
                return False
    return True


def admissible(lf, vf, lg, vg, h: float) -> bool:
    return _half_admissible(lf, vf, lg, vg, h) and _half_admissible(lg, vg, lf, vf, h)


def levy_bracket(lf, vf, lg, vg, tol: float):
    """Bisect the admissible-h set down to an enclosure of width <= tol.

    The admissible set is up-closed in h and h = 1 is always admissible, so
    bisection on (0, 1] is valid. Identical canonical inputs short-circuit
    to the exact zero bracket. Returns (lo, hi, iterations).
    """
    if tuple(lf) == tuple(lg) and tuple(vf) == tuple(vg):
        return 0.0, 0.0, 0
    lo, hi = 0.0, 1.0
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if admissible(lf, vf, lg, vg, mid):
            hi = mid
        else:
            lo = mid
        iterations += 1
    return lo, hi, iterations


def star_sum(lf, vf, lg, vg, op: int):
    """(F*G)(t) = sup over u+v=t, u,v >= 0 of T(F(u), G(v)), exactly.

    On step functions this equals max{T(p_i, q_j) : a_i + b_j < t}: any
    piece pair cut off on the right is dominated by the next pair up. The
    result's jumps are the running maxima over the sorted pair sums.
    """
    n, m = len(lf), len(lg)
    if n == 0 or m == 0:
        return [], []
    pairs = sorted(
        (lf[i] + lg[j], tnorm(op, vf[i], vg[j])) for i in range(n) for j in range(m)
    )
    out_l: list[float] = []
    out_v: list[float] = []
    best = 0.0
    for loc, val in pairs:
        if val > best:
            if out_l and out_l[-1] == loc:
                out_v[-1] = val
            else:
                out_l.append(loc)
                out_v.append(val)
            best = val
    return out_l, out_v


def star_pointwise(lf, vf, lg, vg, op: int):
    """(F*G)(t) = T(F(t), G(t)) exactly; also serves the max kind.

    sup over max(u,v)=t of T(F(u), G(v)) reduces to T(F(t), G(t)) because
    the constraint set is ({t} x (-inf,t]) u ((-inf,t] x {t}) and T is
    nondecreasing in each argument.
    """
    cands = sorted(set(lf) | set(lg))
    out_l: list[float] = []
    out_v: list[float] = []
    best = 0.0
    for c in cands:
        v = tnorm(op, eval_right(lf, vf, c), eval_right(lg, vg, c))
        if v > best:
            out_l.append(c)
            out_v.append(v)
            best = v
    return out_l, out_v


def star_conorm(lf, vf, lg, vg, op: int):
    """(F*G)(s) = inf over u+v=s, u,v >= 0 of T*(F(u), G(v)), exactly.

    With extended pieces A = (0, a_1..a_n, +inf), P = (0, p_1..p_n) (and B, Q
    for G), the pair (i, j) is realized at s iff A_i+B_j < s <= A_{i+1}+B_{j+1};
    the u=0 and u=s endpoints are the i=0 / j=0 pairs. The result is constant
    on each interval (c, c'] between consecutive extended sums, with value
    min{T*(P_i, Q_j)} over pairs realized throughout the interval.
    """
    A = (0.0, *lf, _INF)
    P = (0.0, *vf)
    B = (0.0, *lg, _INF)
    Q = (0.0, *vg)
    n1, m1 = len(P), len(Q)
    enters: list[float] = []
    exits: list[float] = []
    vals: list[float] = []
    cuts = set()
    for i in range(n1):
        for j in range(m1):
            e = A[i] + B[j]
            enters.append(e)
            exits.append(A[i + 1] + B[j + 1])
            vals.append(tconorm(op, P[i], Q[j]))
            cuts.add(e)
    cs = sorted(cuts)
    npairs = len(enters)
    out_l: list[float] = []
    out_v: list[float] = []
    prev = 0.0
    for k, c in enumerate(cs):
        nxt = cs[k + 1] if k + 1 < len(cs) else _INF
        lo = _INF
        for idx in range(npairs):
            if enters[idx] <= c and exits[idx] >= nxt and vals[idx] < lo:
                lo = vals[idx]
        if lo > prev:
            out_l.append(c)
            out_v.append(lo)
            prev = lo
    return out_l, out_v
