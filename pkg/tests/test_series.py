import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hmap.series import TruncatedSeries, combine, differentiate, evaluate, make_generator


def geometric_tail_bound(z_abs: float, order: int, growth: float = 1.0) -> float:
    # |sum_{n>N} c_n z^n| <= growth * (N+1) * |z|^{N+1} / (1 - |z|) for |c_n| <= growth*n
    return growth * (order + 1) * z_abs ** (order + 1) / (1 - z_abs)


class TestGenerators:
    def test_half_plane_table(self):
        s = make_generator("half_plane_l", 3)
        assert np.allclose(s.coeffs, [0, 1, 1, 1])

    def test_koebe_table(self):
        s = make_generator("koebe_k", 4)
        assert np.allclose(s.coeffs, [0, 1, 2, 3, 4])

    def test_log_table(self):
        s = make_generator("log_one_minus_z", 3)
        assert np.allclose(s.coeffs, [0, -1, -1 / 2, -1 / 3])

    def test_identity_table(self):
        s = make_generator("identity", 5)
        assert np.allclose(s.coeffs, [0, 1, 0, 0, 0, 0])

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            make_generator("bogus", 8)

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            make_generator("identity", 0)

    @pytest.mark.parametrize("kind,closed,growth", [
        ("half_plane_l", lambda z: z / (1 - z), 1.0),
        ("koebe_k", lambda z: z / (1 - z) ** 2, 1.0),
        ("log_one_minus_z", lambda z: np.log(1 - z), 1.0),
        ("identity", lambda z: z, 1.0),
    ])
    def test_closed_form_within_tail_bound(self, kind, closed, growth):
        s = make_generator(kind, 64)
        rng = np.random.default_rng(1)
        for _ in range(10):
            z = 0.5 * rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            bound = geometric_tail_bound(abs(z), 64, growth)
            assert abs(s.evaluate(z) - closed(z)) <= bound + 1e-12


class TestEvaluate:
    def test_half_plane_at_half(self):
        s = make_generator("half_plane_l", 50)
        # closed form z/(1-z) = 1.0; tail below 0.5^50/(1-0.5)
        assert abs(evaluate(s, 0.5) - 1.0) <= 0.5 ** 50 / 0.5

    def test_at_zero_returns_constant(self):
        s = TruncatedSeries([3 + 1j, 2, 5])
        assert s.evaluate(0) == 3 + 1j

    def test_koebe_at_03(self):
        s = make_generator("koebe_k", 60)
        assert abs(s.evaluate(0.3) - 0.3 / 0.49) < 1e-12

    def test_outside_disk_rejected(self):
        s = make_generator("identity", 4)
        with pytest.raises(ValueError):
            s.evaluate(1.0)
        with pytest.raises(ValueError):
            s.evaluate(1.2j)

    def test_array_evaluation_matches_scalar(self):
        s = make_generator("koebe_k", 30)
        z = np.array([0.1, 0.2j, -0.3 + 0.1j])
        arr = s.evaluate(z)
        for zi, vi in zip(z, arr):
            assert vi == s.evaluate(complex(zi))


class TestCombine:
    def test_add_coefficient(self):
        l = make_generator("half_plane_l", 8)
        k = make_generator("koebe_k", 8)
        assert combine(l, k, "add").coefficient(2) == 3  # 1 + 2

    def test_mul_identity_squared(self):
        i = make_generator("identity", 6)
        sq = combine(i, i, "mul")
        expect = np.zeros(7)
        expect[2] = 1
        assert np.allclose(sq.coeffs, expect)

    def test_sub_cancels(self):
        l = make_generator("half_plane_l", 8)
        assert np.allclose(combine(l, l, "sub").coeffs, 0)

    def test_scalar_premultiplies_rhs(self):
        l = make_generator("half_plane_l", 8)
        k = make_generator("koebe_k", 8)
        got = combine(l, k, "add", scalar=2j)
        assert got.coefficient(2) == 1 + 4j

    def test_mul_truncates_to_min_order(self):
        a = make_generator("half_plane_l", 10)
        b = make_generator("half_plane_l", 4)
        assert (a * b).order == 4

    def test_unknown_op(self):
        l = make_generator("half_plane_l", 4)
        with pytest.raises(ValueError):
            combine(l, l, "div")


class TestDifferentiate:
    def test_half_plane_derivative(self):
        # d/dz z/(1-z) = 1/(1-z)^2 with coefficients 1, 2, 3, ...
        d = differentiate(make_generator("half_plane_l", 6))
        assert np.allclose(d.coeffs, [1, 2, 3, 4, 5, 6])

    def test_log_derivative(self):
        # d/dz log(1-z) = -1/(1-z): all coefficients -1
        d = differentiate(make_generator("log_one_minus_z", 6))
        assert np.allclose(d.coeffs, -np.ones(6))

    def test_second_derivative_of_identity_vanishes(self):
        d = differentiate(make_generator("identity", 5), times=2)
        assert np.allclose(d.coeffs, 0)

    def test_coefficient_shift_rule(self):
        s = TruncatedSeries([1, 2, 3, 4, 5])
        d2 = s.differentiate(2)
        # c_n -> (n+2)(n+1) c_{n+2}
        assert np.allclose(d2.coeffs, [2 * 1 * 3, 3 * 2 * 4, 4 * 3 * 5])

    def test_order_too_small(self):
        s = TruncatedSeries([0, 1])
        with pytest.raises(ValueError):
            s.differentiate(2)

    def test_bad_times(self):
        s = make_generator("identity", 5)
        with pytest.raises(ValueError):
            s.differentiate(3)


coeff_lists = st.lists(
    st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
    min_size=5, max_size=9,
)


class TestAlgebraProperties:
    @given(coeff_lists, coeff_lists)
    @settings(max_examples=50, deadline=None)
    def test_differentiate_is_linear(self, ca, cb):
        n = min(len(ca), len(cb))
        a, b = TruncatedSeries(ca[:n]), TruncatedSeries(cb[:n])
        lhs = (a + b).differentiate()
        rhs = a.differentiate() + b.differentiate()
        assert lhs.isclose(rhs, tol=1e-9)

    @given(coeff_lists, coeff_lists)
    @settings(max_examples=50, deadline=None)
    def test_mul_commutes(self, ca, cb):
        a, b = TruncatedSeries(ca), TruncatedSeries(cb)
        assert (a * b).isclose(b * a, tol=1e-12)

    @given(coeff_lists, coeff_lists, coeff_lists)
    @settings(max_examples=50, deadline=None)
    def test_mul_associates_up_to_truncation(self, ca, cb, cc):
        n = min(len(ca), len(cb), len(cc))
        a, b, c = (TruncatedSeries(x[:n]) for x in (ca, cb, cc))
        assert ((a * b) * c).isclose(a * (b * c), tol=1e-9)

    def test_arithmetic_never_extends_order(self):
        a = make_generator("half_plane_l", 12)
        b = make_generator("koebe_k", 7)
        assert (a + b).order == 7
        assert (a - b).order == 7
        assert (a * b).order == 7
