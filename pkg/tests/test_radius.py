import math

import numpy as np
import pytest

from hmap.catalog import example22, g_alpha, l_hadamard_l, map_F
from hmap.harmonic import angular_derivatives
from hmap.radius import (
    NonMonotoneError,
    closed_form_F,
    convex_test_at_radius,
    identity_check_tangent,
    p_root_in_radius,
    polynomial_p,
    polynomial_q,
    q_interior_min_location,
    radius_search,
    solve_special_radii,
    starlike_margin,
    starlike_test_at_radius,
)

R_CONVEX = 2 - math.sqrt(3)
R_STAR = math.sqrt((37 - 8 * math.sqrt(10)) / 3) / 3


def identity_map():
    return g_alpha(0.0, 16)


class TestCircleTests:
    def test_identity_convex_everywhere(self):
        for r in (0.1, 0.5, 0.9, 0.99):
            res = convex_test_at_radius(identity_map(), r, n_theta=512)
            assert res.passed
            assert res.min_derivative == pytest.approx(1.0, abs=1e-12)

    def test_identity_starlike_everywhere(self):
        for r in (0.1, 0.5, 0.9, 0.99):
            assert starlike_test_at_radius(identity_map(), r, n_theta=512).passed

    def test_F_convex_below_transition(self):
        assert convex_test_at_radius(map_F(), 0.25).passed

    def test_F_not_convex_above_transition(self):
        res = convex_test_at_radius(map_F(), 0.30)
        assert not res.passed
        assert res.min_derivative < -1e-9

    def test_F_starlike_below_transition(self):
        assert starlike_test_at_radius(map_F(), 0.65).passed

    def test_F_not_starlike_above_transition(self):
        res = starlike_test_at_radius(map_F(), 0.67)
        assert not res.passed

    def test_turning_is_two_pi_even_past_transition(self):
        # the curve still winds once; only local monotonicity is lost
        res = convex_test_at_radius(map_F(), 0.5)
        assert res.total_turning == pytest.approx(2 * math.pi, abs=1e-3)

    def test_example22_not_starlike_at_095(self):
        res = starlike_test_at_radius(example22(), 0.95)
        assert not res.passed
        assert res.min_derivative < -0.1

    def test_radius_validation(self):
        with pytest.raises(ValueError):
            convex_test_at_radius(map_F(), 1.2)


class TestRadiusSearch:
    def test_convexity_bracket_contains_constant(self):
        res = radius_search(map_F(), "convexity", tol=1e-6)
        assert res.r_hi - res.r_lo <= 1e-6
        assert res.r_lo <= R_CONVEX <= res.r_hi
        assert not res.upper_limit_hit

    def test_starlikeness_bracket_contains_constant(self):
        res = radius_search(map_F(), "starlikeness", tol=1e-6)
        assert res.r_hi - res.r_lo <= 1e-6
        assert res.r_lo <= R_STAR <= res.r_hi

    def test_endpoints_certify(self):
        res = radius_search(map_F(), "convexity", tol=1e-5)
        assert convex_test_at_radius(map_F(), res.r_lo).passed
        assert not convex_test_at_radius(map_F(), res.r_hi).passed

    def test_identity_hits_upper_limit(self):
        res = radius_search(identity_map(), "starlikeness", tol=1e-6, n_theta=512)
        assert res.upper_limit_hit
        assert res.r_lo == pytest.approx(0.999)

    def test_no_inner_radius_rejected(self):
        # convexity already fails at r = 0.5 > 2 - sqrt(3), so a search floored
        # there has no passing inner radius to anchor the bracket
        with pytest.raises(ValueError):
            radius_search(map_F(), "convexity", r_min=0.5)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            radius_search(map_F(), "roundness")

    def test_half_plane_square_transition_observed(self):
        # regression: per-circle starlikeness of the coefficient-squared map is
        # lost near 0.63117, far below the disk-image claim; two independent
        # evaluation routes agreed on this transition (see decision notes)
        res = radius_search(l_hadamard_l(64), "starlikeness", tol=1e-4)
        assert 0.6305 < res.r_lo < 0.6318
        assert not res.upper_limit_hit

    def test_result_serializes(self):
        d = radius_search(map_F(), "convexity", tol=1e-4).to_dict()
        assert d["kind"] == "convexity"
        assert d["r_hi"] - d["r_lo"] <= 1e-4

    def test_non_monotone_scan_aborts(self, monkeypatch):
        # a pass above a fail must abort instead of bisecting a fake bracket
        import hmap.radius as radius_mod

        def flaky(f, r, n_theta=0):
            passed = not (0.3 < r < 0.5)  # fails only on a middle band
            return radius_mod.CircleTest(passed, 1.0 if passed else -1.0, 2 * math.pi)

        monkeypatch.setattr(radius_mod, "convex_test_at_radius", flaky)
        with pytest.raises(NonMonotoneError):
            radius_mod.radius_search(map_F(), "convexity", tol=1e-3)


class TestClosedForms:
    def test_D_vanishes_on_real_axis(self):
        for r in (0.1, 0.5, 0.9):
            assert closed_form_F("D", r, 0.0) == 0.0

    def test_C_point_value(self):
        # C(0.5, 0) = 0.5 [1.25 - 1] / 0.5^4 = 2, and F(0.5) = 0.5/0.25 = 2
        assert closed_form_F("C", 0.5, 0.0) == pytest.approx(2.0, abs=1e-14)

    def test_C_plus_iD_is_the_map_value(self):
        F = map_F()
        from hmap.harmonic import evaluate_f

        for r in (0.2, 0.6, 0.9):
            th = np.linspace(0, 2 * np.pi, 17)
            want = evaluate_f(F, r * np.exp(1j * th))
            got = closed_form_F("C", r, th) + 1j * closed_form_F("D", r, th)
            assert np.max(np.abs(got - want)) < 1e-9

    def test_A_plus_iB_is_the_angular_derivative(self):
        F = map_F()
        for r in (0.15, 0.45, 0.8):
            th = np.linspace(0, 2 * np.pi, 23)
            d1, _ = angular_derivatives(F, r, th)
            got = closed_form_F("A", r, th) + 1j * closed_form_F("B", r, th)
            assert np.max(np.abs(got - d1)) < 1e-9

    def test_B_at_small_radius(self):
        # at theta = pi/2 the bracket reduces to -2r^2/|1-z|^4
        got = closed_form_F("B", 0.1, math.pi / 2)
        assert got == pytest.approx(-0.02 / abs(1 - 0.1j) ** 4, abs=1e-15)

    def test_unknown_expr(self):
        with pytest.raises(ValueError):
            closed_form_F("E", 0.5, 0.0)


class TestPolynomials:
    def test_p_at_minus_one_factors(self):
        rng = np.random.default_rng(12)
        for r in rng.uniform(0.01, 0.99, 100):
            assert polynomial_p(r, -1.0) == pytest.approx(
                (1 + r) ** 6 * (1 - 4 * r + r * r), abs=1e-12)

    def test_q_at_endpoints(self):
        rng = np.random.default_rng(13)
        for r in rng.uniform(0.01, 0.99, 100):
            assert polynomial_q(r, -1.0) == pytest.approx((1 + r) ** 4, abs=1e-12)
            assert polynomial_q(r, 1.0) == pytest.approx((1 - r) ** 4, abs=1e-12)

    def test_q_interior_minimum_is_critical(self):
        r = 0.7
        u = q_interior_min_location(r)
        dq = -2 * r * (1 + r * r) + 16 * r * r * u - 6 * r * (1 + r * r) * u * u
        assert abs(dq) < 1e-10
        # second derivative positive: a genuine local minimum
        assert 16 * r * r - 12 * r * (1 + r * r) * u > 0

    def test_q_min_location_needs_radicand(self):
        with pytest.raises(ValueError):
            q_interior_min_location(0.3)

    def test_p_sign_flip_at_convexity_radius(self):
        u = np.linspace(-1, 1, 2001)
        assert np.min(polynomial_p(R_CONVEX - 1e-3, u)) >= 0
        assert np.min(polynomial_p(R_CONVEX + 1e-3, u)) < 0

    def test_q_sign_flip_at_starlikeness_radius(self):
        u = np.linspace(-1, 1, 2001)
        assert np.min(polynomial_q(R_STAR - 1e-3, u)) >= 0
        assert np.min(polynomial_q(R_STAR + 1e-3, u)) < 0

    def test_starlike_margin_root_matches_closed_form(self):
        assert starlike_margin(R_STAR) == pytest.approx(0.0, abs=1e-12)

    def test_p_roots_increase_with_u(self):
        # sampled, not certified: the first vanishing radius of p grows with
        # u, so u = -1 is the binding direction
        roots = [p_root_in_radius(u) for u in np.linspace(-1.0, 0.9, 30)]
        assert all(b > a for a, b in zip(roots, roots[1:]))
        assert roots[0] == pytest.approx(R_CONVEX, abs=1e-12)

    def test_p_root_domain(self):
        with pytest.raises(ValueError):
            p_root_in_radius(1.0)


class TestTangentIdentities:
    @pytest.mark.parametrize("r,u", [(0.2, 0.3), (0.5, -0.5), (0.35, 0.7), (0.8, -0.2)])
    def test_residuals_small(self, r, u):
        res = identity_check_tangent(r, u)
        assert res.convex < 1e-5
        assert res.starlike < 1e-5

    def test_grid_excluding_poles(self):
        worst = 0.0
        tested = 0
        for r in np.linspace(0.05, 0.95, 20):
            for u in np.linspace(-0.95, 0.95, 20):
                try:
                    res = identity_check_tangent(float(r), float(u))
                except ValueError:
                    continue
                tested += 1
                worst = max(worst, res.convex, res.starlike)
        assert tested > 300  # pole exclusions are rare
        assert worst < 1e-5

    def test_u_endpoints_rejected(self):
        with pytest.raises(ValueError):
            identity_check_tangent(0.5, 1.0)
        with pytest.raises(ValueError):
            identity_check_tangent(0.5, -1.0)

    def test_pole_rejected(self):
        # bracket (1+r^2) u - 2r vanishes at u = 2r/(1+r^2)
        r = 0.5
        u = 2 * r / (1 + r * r)
        with pytest.raises(ValueError):
            identity_check_tangent(r, u)


class TestSpecialRadii:
    def test_convexity_constant(self):
        sp = solve_special_radii()
        assert sp.r_convex == pytest.approx(R_CONVEX, abs=1e-12)

    def test_starlikeness_constant(self):
        sp = solve_special_radii()
        assert sp.r_star == pytest.approx(R_STAR, abs=1e-10)

    def test_class_level_constants(self):
        sp = solve_special_radii()
        assert sp.r_close_to_convex_star == pytest.approx(0.65685424949238, abs=1e-11)
        assert sp.r_close_to_convex_convex == pytest.approx(R_CONVEX, abs=1e-15)

    def test_ordering_sandwich(self):
        sp = solve_special_radii()
        assert sp.r_close_to_convex_star <= sp.r_star
        assert sp.r_convex < sp.r_close_to_convex_star
