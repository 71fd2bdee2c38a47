import numpy as np
import pytest

from hmap.catalog import example21, f_alpha, g_alpha, map_F, map_L
from hmap.harmonic import (
    ExactEvaluators,
    HarmonicMap,
    SingularPointError,
    angular_derivatives,
    dilatation,
    evaluate_f,
    injectivity_sample_check,
    jacobian,
    sense_preserving_check,
)
from hmap.series import TruncatedSeries, make_generator


def identity_map(order=16):
    return g_alpha(0.0, order)


def fd_first(f, r, theta, h=1e-5):
    zp = r * np.exp(1j * (theta + h))
    zm = r * np.exp(1j * (theta - h))
    return (evaluate_f(f, zp) - evaluate_f(f, zm)) / (2 * h)


def fd_second(f, r, theta, h=1e-3):
    # five-point stencil: the 1e-5 step of the first derivative would put the
    # division by h^2 below the double-precision roundoff floor
    vals = [evaluate_f(f, r * np.exp(1j * (theta + k * h))) for k in (-2, -1, 0, 1, 2)]
    return (-vals[0] + 16 * vals[1] - 30 * vals[2] + 16 * vals[3] - vals[4]) / (12 * h * h)


class TestConstruction:
    def test_normalization_enforced(self):
        bad = TruncatedSeries([0.5, 1, 0])
        with pytest.raises(ValueError):
            HarmonicMap(bad, make_generator("identity", 2))
        bad2 = TruncatedSeries([0, 2, 0])
        with pytest.raises(ValueError):
            HarmonicMap(bad2, make_generator("identity", 2))

    def test_exact_series_disagreement_rejected(self):
        h = make_generator("half_plane_l", 32)
        g = make_generator("identity", 32)
        wrong = ExactEvaluators(
            h=lambda z: z / (1 - z) + 0.1,  # offset breaks agreement
            g=lambda z: z,
            dh=lambda z: 1 / (1 - z) ** 2,
            dg=lambda z: 1 + 0 * z,
            d2h=lambda z: 2 / (1 - z) ** 3,
            d2g=lambda z: 0 * z,
        )
        with pytest.raises(ValueError):
            HarmonicMap(h, g, wrong)

    def test_catalog_constructions_pass_agreement(self):
        # construction itself runs the 20-point exact/series cross-check
        for f in (map_F(), map_L(), f_alpha(0.3 + 0.4j), example21(), g_alpha(1j)):
            assert f.exact is not None


class TestEvaluate:
    def test_identity_map(self):
        f = identity_map()
        assert evaluate_f(f, 0.3 + 0.4j) == pytest.approx(0.3 + 0.4j)

    def test_F_on_real_axis(self):
        # imaginary part of z/(1-z) vanishes for real z, so F(r) = r/(1-r)^2
        F = map_F()
        for r in (0.1, 0.5, 0.75, 0.9):
            assert evaluate_f(F, r) == pytest.approx(r / (1 - r) ** 2, abs=1e-12)

    def test_example21_collision_values(self):
        f = example21()
        z0 = (3 + np.sqrt(3) * 1j) / 4
        assert abs(evaluate_f(f, z0) - 0.75) < 1e-12
        assert abs(evaluate_f(f, np.conj(z0)) - 0.75) < 1e-12

    def test_outside_disk_rejected(self):
        with pytest.raises(ValueError):
            evaluate_f(map_F(), 1.0 + 0j)

    def test_series_exact_agreement_inside_half_disk(self):
        F = map_F()
        series_only = HarmonicMap(F.h, F.g, None)
        rng = np.random.default_rng(5)
        z = 0.5 * np.sqrt(rng.uniform(0, 1, 50)) * np.exp(1j * rng.uniform(0, 2 * np.pi, 50))
        assert np.max(np.abs(evaluate_f(F, z) - evaluate_f(series_only, z))) < 1e-8


class TestDilatation:
    def test_L_dilatation_is_minus_z(self):
        L = map_L()
        for z in (0.2j, -0.5, 0.3 + 0.3j, 0.85):
            assert dilatation(L, z) == pytest.approx(-z, abs=1e-9)

    def test_F_dilatation_is_z(self):
        F = map_F()
        for z in (0.2j, -0.5, 0.3 + 0.3j, 0.85):
            assert dilatation(F, z) == pytest.approx(z, abs=1e-9)

    def test_g_alpha_dilatation(self):
        alpha = 0.7j
        f = g_alpha(alpha)
        z = 0.4 - 0.2j
        assert dilatation(f, z) == pytest.approx(alpha * z, abs=1e-12)

    def test_singular_point_raises(self):
        # h = z + z^2 has h' = 1 + 2z, exactly zero at z = -1/2
        h = TruncatedSeries([0, 1, 1])
        f = HarmonicMap(h, make_generator("identity", 2))
        with pytest.raises(SingularPointError) as err:
            dilatation(f, -0.5)
        assert err.value.z == pytest.approx(-0.5)


class TestJacobian:
    def test_identity(self):
        f = identity_map()
        assert jacobian(f, 0.5j) == pytest.approx(1.0)

    def test_g_alpha_unimodular(self):
        f = g_alpha(1j)
        for r in (0.1, 0.5, 0.9):
            assert jacobian(f, r * np.exp(0.3j)) == pytest.approx(1 - r * r, abs=1e-12)

    def test_jacobian_dilatation_identity(self):
        # J = |h'|^2 (1 - |w|^2) wherever h' != 0
        rng = np.random.default_rng(11)
        for f in (map_F(), map_L(), example21(), f_alpha(0.6j)):
            z = 0.9 * np.sqrt(rng.uniform(0, 1, 30)) * np.exp(1j * rng.uniform(0, 2 * np.pi, 30))
            hp = f.dh_at(z)
            w = dilatation(f, z)
            lhs = jacobian(f, z)
            rhs = np.abs(hp) ** 2 * (1 - np.abs(w) ** 2)
            assert np.max(np.abs(lhs - rhs)) < 1e-10 * np.max(1 + np.abs(rhs))

    def test_positive_when_dilatation_small(self):
        f = f_alpha(0.9)
        z = 0.77 * np.exp(1.1j)
        assert abs(dilatation(f, z)) < 1
        assert jacobian(f, z) > 0


class TestAngularDerivatives:
    def test_identity_map_values(self):
        f = identity_map()
        d1, d2 = angular_derivatives(f, 0.5, 0.0)
        assert d1 == pytest.approx(0.5j)
        assert d2 == pytest.approx(-0.5)

    def test_F_imaginary_part_closed_form(self):
        # Im(dF/dtheta) at (0.1, pi/2) is -0.02/|1-0.1i|^4
        F = map_F()
        d1, _ = angular_derivatives(F, 0.1, np.pi / 2)
        expect = -0.02 / abs(1 - 0.1j) ** 4
        assert d1.imag == pytest.approx(expect, abs=1e-12)

    @pytest.mark.parametrize("factory", [map_F, map_L, example21, lambda: f_alpha(0.5j), lambda: g_alpha(0.8)])
    def test_against_finite_differences(self, factory):
        # the 16 x 16 grid stays below the series/exact switch radius so the
        # oracle differences never mix the two evaluation routes
        f = factory()
        radii = np.linspace(0.05, 0.65, 16)
        thetas = np.linspace(0, 2 * np.pi, 16, endpoint=False)
        for r in radii:
            d1, d2 = angular_derivatives(f, r, thetas)
            for k, t in enumerate(thetas):
                assert abs(d1[k] - fd_first(f, r, t)) < 1e-6
                assert abs(d2[k] - fd_second(f, r, t)) < 1e-6

    @pytest.mark.parametrize("factory", [map_F, map_L, lambda: f_alpha(0.5j)])
    def test_against_finite_differences_exact_regime(self, factory):
        # above the switch radius the closed forms drive both routes; the
        # second-derivative step shrinks to keep the stencil truncation small
        f = factory()
        thetas = np.linspace(0, 2 * np.pi, 12, endpoint=False)
        for r in (0.75, 0.85):
            d1, d2 = angular_derivatives(f, r, thetas)
            for k, t in enumerate(thetas):
                assert abs(d1[k] - fd_first(f, r, t)) < 1e-6 * max(1, abs(d1[k]))
                assert abs(d2[k] - fd_second(f, r, t, h=3e-4)) < 1e-5 * max(1, abs(d2[k]))

    def test_bad_radius(self):
        with pytest.raises(ValueError):
            angular_derivatives(map_F(), 1.5, 0.0)


class TestSensePreserving:
    def test_example21_passes(self):
        # dilatation is z itself, so |w| = |z| < 1 on the whole grid
        rep = sense_preserving_check(example21(), 0.95)
        assert rep.passed and rep.worst_value > 0

    def test_g_alpha_passes(self):
        rep = sense_preserving_check(g_alpha(np.exp(0.4j)), 0.95)
        assert rep.passed

    def test_overshooting_map_fails_above_quarter(self):
        # g' = 4z makes |w| = 4|z| cross 1 at |z| = 1/4
        h = make_generator("identity", 8)
        g = TruncatedSeries(np.array([0, 0, 2] + [0] * 6, dtype=complex))
        f = HarmonicMap(h, g)
        rep = sense_preserving_check(f, 0.5, grid=(16, 16))
        assert not rep.passed
        assert abs(rep.first_failure) > 0.25

    def test_grid_too_coarse_rejected(self):
        with pytest.raises(ValueError):
            sense_preserving_check(map_F(), 0.9, grid=(4, 64))

    def test_report_serializes(self):
        d = sense_preserving_check(example21(), 0.9).to_dict()
        assert d["check_kind"] == "necessary"
        assert d["passed"] is True


class TestInjectivity:
    def test_example21_collision_flagged(self):
        f = example21()
        z0 = (3 + np.sqrt(3) * 1j) / 4
        rep = injectivity_sample_check(f, 0.9, n_samples=400, include=(z0, np.conj(z0)))
        assert rep.collision and not rep.passed
        assert rep.min_image_distance < 1e-12
        a, b = rep.witness
        assert {round(a.imag, 6), round(b.imag, 6)} == {round(z0.imag, 6), round(-z0.imag, 6)}

    def test_identity_no_collision(self):
        rep = injectivity_sample_check(identity_map(), 0.9, n_samples=400)
        assert rep.passed and not rep.collision

    def test_F_no_collision(self):
        rep = injectivity_sample_check(map_F(), 0.9, n_samples=600)
        assert rep.passed

    def test_sample_cap(self):
        with pytest.raises(ValueError):
            injectivity_sample_check(map_F(), 0.5, n_samples=5000)
