import numpy as np
import pytest

from fuzzymetrics import (
    AlphaGrid,
    BadGrid,
    CutCurve1D,
    DeclaredJump,
    EmptyCut,
    Interval,
    NonNested,
    OutOfRange,
    alpha_cut,
    as_curve,
    make_limit,
    make_sampled_1d,
    make_un,
    membership_at,
    random_family,
    refine_to_grid,
    sample_curve,
    validate_representation,
)


def bisect_membership(u, x, iters=60):
    """Independent oracle: sup level whose cut contains x, by pure bisection
    on alpha_cut containment."""
    if alpha_cut(u, 1.0).contains(x):
        return 1.0
    if not alpha_cut(u, 0.0).contains(x):
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if alpha_cut(u, mid).contains(x):
            lo = mid
        else:
            hi = mid
    return lo


def triangular():
    return make_sampled_1d([0, 0.5, 1], [0, 0.25, 0.5], [1, 0.75, 0.5])


class TestAlphaGrid:
    def test_needs_both_endpoints(self):
        with pytest.raises(BadGrid):
            AlphaGrid(np.array([0.0, 0.5]))
        with pytest.raises(BadGrid):
            AlphaGrid(np.array([0.1, 1.0]))

    def test_needs_strict_increase(self):
        with pytest.raises(BadGrid):
            AlphaGrid(np.array([0.0, 0.5, 0.5, 1.0]))

    def test_needs_two_levels(self):
        with pytest.raises(BadGrid):
            AlphaGrid(np.array([0.0]))

    def test_union(self):
        g = AlphaGrid(np.array([0.0, 0.5, 1.0])).union(AlphaGrid(np.array([0.0, 0.25, 1.0])))
        assert np.array_equal(g.levels, [0.0, 0.25, 0.5, 1.0])


class TestInterval:
    def test_rejects_inverted(self):
        with pytest.raises(EmptyCut):
            Interval(1.0, 0.0)

    def test_singleton_ok(self):
        assert Interval(2.0, 2.0).width == 0.0


class TestMakeSampled:
    def test_crisp_box(self):
        u = make_sampled_1d([0, 0.5, 1], [0, 0, 0], [1, 1, 1])
        for a in (0.0, 0.3, 1.0):
            assert alpha_cut(u, a) == Interval(0.0, 1.0)

    def test_triangular(self):
        u = triangular()
        assert alpha_cut(u, 1.0) == Interval(0.5, 0.5)

    def test_non_monotone_lower_rejected(self):
        with pytest.raises(NonNested):
            make_sampled_1d([0, 0.5, 1], [0, 0.6, 0.5], [1, 1, 1])

    def test_empty_cut_rejected(self):
        with pytest.raises(EmptyCut):
            make_sampled_1d([0, 0.5, 1], [0, 0.8, 0.9], [1, 0.7, 0.9])

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            make_sampled_1d([0, 0.5, 1], [0, 0], [1, 1, 1])


class TestAlphaCut:
    def test_triangular_interpolation(self):
        cut = alpha_cut(triangular(), 0.25)
        assert cut == Interval(0.125, 0.875)

    def test_rejects_out_of_range(self):
        with pytest.raises(OutOfRange):
            alpha_cut(triangular(), 1.5)
        with pytest.raises(OutOfRange):
            alpha_cut(triangular(), -0.1)

    def test_counterexample_cut_at_top(self):
        assert alpha_cut(make_un(1), 1.0) == Interval(0.0, 0.0)

    def test_counterexample_low_branch(self):
        for n in (1, 3, 50):
            assert alpha_cut(make_un(n), 1.0 / 3.0) == Interval(0.0, 1.0)
            assert alpha_cut(make_un(n), 0.2) == Interval(0.0, 1.0)

    def test_exact_at_grid_nodes(self):
        for u in random_family(seed=11, count=10):
            levels = u.grid.levels
            for i, a in enumerate(levels.tolist()):
                cut = alpha_cut(u, a)
                assert cut.lo == u.lower[i] and cut.hi == u.upper[i]

    def test_nestedness(self):
        rng = np.random.default_rng(5)
        for u in random_family(seed=23, count=10):
            for _ in range(20):
                a, b = sorted(rng.uniform(0, 1, 2))
                outer, inner = alpha_cut(u, a), alpha_cut(u, b)
                assert outer.lo <= inner.lo and inner.hi <= outer.hi


class TestMembership:
    def test_peak(self):
        assert membership_at(triangular(), 0.5) == 1.0

    def test_outside_support(self):
        assert membership_at(triangular(), 2.0) == 0.0

    def test_interior_matches_bisection_oracle(self):
        u = triangular()
        got = membership_at(u, 0.125)
        assert got == 0.25
        assert abs(bisect_membership(u, 0.125) - got) < 1e-12

    def test_random_points_match_oracle(self):
        rng = np.random.default_rng(2)
        for u in random_family(seed=3, count=8):
            for _ in range(10):
                x = rng.uniform(u.lower[0] - 0.2, u.upper[0] + 0.2)
                assert abs(membership_at(u, x) - bisect_membership(u, x)) < 1e-12

    def test_duality_on_grid_levels(self):
        # x in cut(a)  <=>  membership(x) >= a, exactly, for positive grid
        # levels (the 0-cut is the support closure, not a superlevel set)
        rng = np.random.default_rng(7)
        for u in random_family(seed=17, count=10):
            for a in u.grid.levels.tolist():
                if a == 0.0:
                    continue
                cut = alpha_cut(u, a)
                for x in rng.uniform(u.lower[0] - 0.1, u.upper[0] + 0.1, 8):
                    assert cut.contains(x) == (membership_at(u, x) >= a)

    def test_limit_membership_level(self):
        u = make_limit()
        for x in (0.25, 0.5, 1.0):
            assert abs(membership_at(u, x) - 1.0 / 3.0) <= 1e-9
        assert membership_at(u, 0.0) == 1.0
        assert membership_at(u, 1.5) == 0.0


class TestValidation:
    def test_constructed_sampled_pass(self):
        for u in random_family(seed=29, count=10):
            assert validate_representation(u).passed

    def test_counterexample_members_pass(self):
        for n in (1, 2, 7, 60):
            report = validate_representation(make_un(n))
            assert report.passed, report.failures()

    def test_limit_passes_despite_right_jump(self):
        # the cut jumps only when approached from above one third; left
        # continuity holds there, which is all the axioms require
        report = validate_representation(make_limit())
        assert report.passed, report.failures()

    def test_one_sided_limits_at_the_jump(self):
        # oracle check of the closed forms around the jump level
        u = make_limit()
        base = alpha_cut(u, 1.0 / 3.0)
        assert base == Interval(0.0, 1.0)
        for k in range(2, 9):
            d = 10.0 ** -k
            below = alpha_cut(u, 1.0 / 3.0 - d)
            above = alpha_cut(u, 1.0 / 3.0 + d)
            assert below == Interval(0.0, 1.0)  # left side continuous
            assert above == Interval(0.0, 0.0)  # right side jumped

    def test_undeclared_left_jump_fails(self):
        u = CutCurve1D(
            lower_fn=lambda a: np.zeros_like(np.asarray(a, dtype=float)),
            upper_fn=lambda a: np.where(np.asarray(a, dtype=float) < 0.5, 1.0, 0.3),
        )
        report = validate_representation(u)
        assert not report.passed
        assert any(c.name == "left_continuity" and not c.passed for c in report.checks)

    def test_jump_at_zero_needs_declaration(self):
        def upper(a):
            a = np.asarray(a, dtype=float)
            return np.where(a > 0.0, 0.0, 1.0)

        zeros = lambda a: np.zeros_like(np.asarray(a, dtype=float))
        undeclared = CutCurve1D(lower_fn=zeros, upper_fn=upper)
        assert not validate_representation(undeclared).passed
        declared = CutCurve1D(
            lower_fn=zeros,
            upper_fn=upper,
            jumps=(DeclaredJump(alpha=0.0, lower_right=0.0, upper_right=0.0),),
        )
        assert validate_representation(declared).passed

    def test_steep_but_continuous_is_not_a_jump(self):
        # slope 50 would exceed tol at the finest probe if the check naively
        # compared raw distances instead of extrapolating the limit
        u = make_sampled_1d([0, 0.98, 1], [0, 0, 0], [2, 2, 1])
        assert validate_representation(u, tol=1e-9).passed

    def test_tol_must_be_positive(self):
        with pytest.raises(OutOfRange):
            validate_representation(triangular(), tol=0.0)


class TestResampling:
    def test_refine_preserves_function(self):
        u = triangular()
        fine = refine_to_grid(u, [0, 0.1, 0.25, 0.5, 0.77, 1])
        for a in np.linspace(0, 1, 41):
            assert abs(alpha_cut(fine, a).lo - alpha_cut(u, a).lo) < 1e-15
            assert abs(alpha_cut(fine, a).hi - alpha_cut(u, a).hi) < 1e-15

    def test_refine_rejects_dropping_nodes(self):
        with pytest.raises(BadGrid):
            refine_to_grid(triangular(), [0, 0.25, 1])

    def test_as_curve_matches_sampled(self):
        u = triangular()
        c = as_curve(u)
        for a in np.linspace(0, 1, 17):
            assert alpha_cut(c, a) == alpha_cut(u, a)

    def test_sample_curve_hits_closed_form_at_nodes(self):
        u = make_un(3)
        s = sample_curve(u, [0.0, 0.25, 1.0 / 3.0, 0.5, 0.9, 1.0])
        for a in s.grid.levels.tolist():
            assert alpha_cut(s, a) == alpha_cut(u, a)
