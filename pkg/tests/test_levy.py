import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmspace import (
    NonPositiveH,
    admissible,
    heaviside,
    heaviside_distance,
    levy_distance,
    make_step,
    weakly_converges,
)

from conftest import dyadic_dist, dyadic_dists


# --- independent oracle in exact rational arithmetic ---------------------------
# Same metric, different implementation: distributions become lists of exact
# Fraction jumps, the per-h decision is made from the definition on each
# constant piece, and the bisection runs in rationals. Any float rounding
# slip in the kernels shows up as a disagreement here.


def _frac_jumps(f):
    return [(Fraction(t), Fraction(v)) for t, v in f.jumps]


def _frac_eval_right(jumps, t: Fraction) -> Fraction:
    out = Fraction(0)
    for loc, lev in jumps:
        if loc <= t:
            out = lev
        else:
            break
    return out


def _frac_half(fj, gj, h: Fraction) -> bool:
    # sup of G(t) - F(t+h) over [0, 1/h); pieces open at 0, at G's jumps,
    # and at F's jumps shifted left by h
    upper = 1 / h
    starts = [Fraction(0)]
    starts += [loc for loc, _ in gj if 0 < loc < upper]
    starts += [loc - h for loc, _ in fj if 0 < loc - h < upper]
    for p in starts:
        if _frac_eval_right(gj, p) > _frac_eval_right(fj, p + h) + h:
            return False
    return True


def _frac_admissible(fj, gj, h: Fraction) -> bool:
    return _frac_half(fj, gj, h) and _frac_half(gj, fj, h)


def _frac_levy(f, g, tol=Fraction(1, 10**13)):
    fj, gj = _frac_jumps(f), _frac_jumps(g)
    if fj == gj:
        return Fraction(0), Fraction(0)
    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _frac_admissible(fj, gj, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def _frac_admissible_dense(fj, gj, h: Fraction) -> bool:
    # weaker cross-check of the piece-opening enumeration itself: sample
    # the definition on a dense rational grid in both directions
    upper = 1 / h
    stop = min(upper, Fraction(8))
    ts = {Fraction(k, 64) for k in range(int(stop * 64) + 1)}
    ts |= {loc for loc, _ in fj} | {loc for loc, _ in gj}
    ts |= {loc - h for loc, _ in fj} | {loc - h for loc, _ in gj}
    for t in ts:
        if not 0 <= t < upper:
            continue
        if _frac_eval_right(gj, t) > _frac_eval_right(fj, t + h) + h:
            return False
        if _frac_eval_right(fj, t) > _frac_eval_right(gj, t + h) + h:
            return False
    return True


class TestRationalOracle:
    def test_matches_bisection_on_random_pairs(self, rng):
        for _ in range(100):
            f = dyadic_dist(rng)
            g = dyadic_dist(rng)
            res = levy_distance(f, g)
            lo, hi = _frac_levy(f, g)
            mid = float((lo + hi) / 2)
            assert abs(res.value - mid) <= 2e-12, (f.jumps, g.jumps, res, mid)

    def test_piece_openings_agree_with_dense_sampling(self, rng):
        for _ in range(25):
            f = dyadic_dist(rng, 4)
            g = dyadic_dist(rng, 4)
            fj, gj = _frac_jumps(f), _frac_jumps(g)
            for num in (1, 3, 13, 64, 111, 128):
                h = Fraction(num, 128)
                assert _frac_admissible(fj, gj, h) == _frac_admissible_dense(
                    fj, gj, h
                ), (f.jumps, g.jumps, h)
            for num, den in [(1, 3), (2, 7), (5, 9)]:
                h = Fraction(num, den)
                assert _frac_admissible(fj, gj, h) == _frac_admissible_dense(
                    fj, gj, h
                ), (f.jumps, g.jumps, h)


class TestKnownValues:
    def test_shifted_step_against_unit(self):
        # F jumps to 1/4 at 1/2 and to 1 at 1; G is the step at 1/4. The
        # binding constraint is G = 1 just after 1/4 versus F(1/4 + h) + h,
        # which first holds at h = 3/4.
        f = make_step([(0.5, 0.25), (1.0, 1.0)])
        g = heaviside(0.25)
        res = levy_distance(f, g)
        assert res.bracket[1] == 0.75
        assert abs(res.value - 0.75) <= 1e-12

    def test_level_gap_only(self):
        # same jump location, levels 1 vs 1/2: for t > 1 the constraint
        # F(t) <= G(t+h)+h reads 1 <= 1/2 + h, so d is the level gap 1/2
        f = make_step([(1.0, 1.0)])
        g = make_step([(1.0, 0.5)])
        res = levy_distance(f, g)
        assert abs(res.value - 0.5) <= 1e-12

    def test_far_tail_uses_window(self):
        # identical except beyond the 1/h window: jump at 4 vs 4.5 with the
        # same level; h > 1/4 hides everything past t = 4 from the window
        # at h = 1/4... the discrepancy region [4, 4.5) needs h with
        # 1/h <= 4, i.e. h >= 1/4.
        f = make_step([(0.25, 0.5), (4.0, 1.0)])
        g = make_step([(0.25, 0.5), (4.5, 1.0)])
        res = levy_distance(f, g)
        assert abs(res.value - 0.25) <= 1e-12

    def test_heaviside_closed_form_cases(self):
        assert heaviside_distance(0.0, 0.0) == 0.0
        assert heaviside_distance(3.0, 3.0) == 0.0
        assert heaviside_distance(0.0, 1.0) == 1.0
        assert heaviside_distance(0.0, 0.25) == 0.25
        assert heaviside_distance(1.0, 2.0) == 1.0
        assert heaviside_distance(2.0, 3.0) == 0.5
        assert heaviside_distance(4.0, 100.0) == 0.25
        assert heaviside_distance(math.inf, math.inf) == 0.0
        with pytest.raises(NonPositiveH):
            heaviside_distance(-1.0, 2.0)
        with pytest.raises(NonPositiveH):
            heaviside_distance(math.nan, 2.0)


class TestMetricProperties:
    def test_identity_short_circuits(self):
        f = make_step([(0.5, 0.25), (1.0, 1.0)])
        res = levy_distance(f, make_step(f.jumps))
        assert res.value == 0.0
        assert res.bracket == (0.0, 0.0)
        assert res.iterations == 0

    def test_symmetry_is_exact(self, rng):
        for _ in range(50):
            f, g = dyadic_dist(rng), dyadic_dist(rng)
            a = levy_distance(f, g)
            b = levy_distance(g, f)
            assert a.bracket == b.bracket
            assert a.value == b.value

    def test_bounded_by_one_with_tight_bracket(self, rng):
        for _ in range(50):
            f, g = dyadic_dist(rng), dyadic_dist(rng)
            res = levy_distance(f, g)
            lo, hi = res.bracket
            assert 0.0 <= lo <= res.value <= hi <= 1.0
            assert hi - lo <= 1e-12 or (lo, hi) == (0.0, 0.0)

    def test_distinct_inputs_have_positive_distance(self, rng):
        for _ in range(50):
            f, g = dyadic_dist(rng), dyadic_dist(rng)
            if f != g:
                assert levy_distance(f, g).bracket[0] > 0.0

    @given(dyadic_dists(), dyadic_dists(), dyadic_dists())
    @settings(max_examples=40, deadline=None)
    def test_triangle_inequality(self, f, g, h):
        dfh = levy_distance(f, h).value
        dfg = levy_distance(f, g).value
        dgh = levy_distance(g, h).value
        assert dfh <= dfg + dgh + 3e-9


class TestAdmissible:
    def test_h_one_always_admissible(self, rng):
        for _ in range(20):
            assert admissible(dyadic_dist(rng), dyadic_dist(rng), 1.0)

    def test_up_closed_in_h(self, rng):
        for _ in range(40):
            f, g = dyadic_dist(rng), dyadic_dist(rng)
            hs = sorted(rng.uniform(1e-6, 1.0) for _ in range(6))
            flags = [admissible(f, g, h) for h in hs]
            for a, b in zip(flags, flags[1:]):
                assert b or not a

    def test_rejects_bad_h(self):
        f = make_step([(1.0, 1.0)])
        with pytest.raises(NonPositiveH):
            admissible(f, f, 0.0)
        with pytest.raises(NonPositiveH):
            admissible(f, f, -0.5)
        with pytest.raises(NonPositiveH):
            admissible(f, f, math.nan)


class TestWeakConvergence:
    def test_translates_converge(self):
        f = make_step([(0.5, 0.25), (1.0, 1.0)])
        fs = [f.translate(2.0**-n) for n in range(1, 9)]
        assert weakly_converges(fs, f)

    def test_far_constant_family_does_not(self):
        f = make_step([(0.5, 0.25), (1.0, 1.0)])
        fs = [f.translate(0.5)] * 6
        assert not weakly_converges(fs, f)

    def test_empty_family_rejected(self):
        with pytest.raises(ValueError):
            weakly_converges([], heaviside(0.0))
