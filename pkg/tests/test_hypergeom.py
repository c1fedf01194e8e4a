import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from concave_dirichlet.hypergeom import (
    EPS_EXCL,
    UnitModulusParameter,
    coefficient_A,
    coefficient_B,
    coefficients_A,
    domination_check,
    domination_ratios,
    gamma_grid,
    hyp2f1_euler,
    hyp2f1_terminating,
    pochhammer,
)
from concave_dirichlet.series import TruncatedSeries, series_pow_real


def mp_terminating(m, b, c, z, dps=80):
    # independent high-precision oracle: the defining finite sum
    with mpmath.workdps(dps):
        b, c, z = mpmath.mpmathify(b), mpmath.mpmathify(c), mpmath.mpmathify(z)
        term, total = mpmath.mpf(1), mpmath.mpf(1)
        for k in range(m):
            term *= (-m + k) * (b + k) / ((c + k) * (k + 1)) * z
            total += term
        return complex(total)


class TestUnitModulusParameter:
    def test_x_on_circle(self):
        p = UnitModulusParameter(1.0)
        assert_allclose(abs(p.x), 1.0)
        assert_allclose(p.x, np.exp(1j))

    @pytest.mark.parametrize("g", [math.pi, -math.pi, math.pi - EPS_EXCL / 2, float("nan")])
    def test_excluded(self, g):
        with pytest.raises(ValueError):
            UnitModulusParameter(g)

    def test_from_complex(self):
        assert_allclose(UnitModulusParameter.from_complex(1j).gamma, math.pi / 2)
        with pytest.raises(ValueError):
            UnitModulusParameter.from_complex(2.0)

    def test_grid_is_open_at_pi(self):
        g = gamma_grid(256, 1e-3)
        assert g.size == 256
        assert np.all(np.abs(g) < math.pi)


def test_pochhammer():
    assert pochhammer(5.5, 0) == 1
    assert pochhammer(2, 3) == 24
    assert pochhammer(-1, 2) == 0
    assert_allclose(pochhammer(0.5 + 1j, 4), complex(mpmath.rf(0.5 + 1j, 4)))
    with pytest.raises(ValueError):
        pochhammer(1, -1)


class TestTerminating:
    def test_m_zero(self):
        assert hyp2f1_terminating(0, 3.3, -0.5, 7 + 2j) == 1

    def test_two_term(self):
        alpha, x = 1.7, np.exp(0.4j)
        assert_allclose(hyp2f1_terminating(1, 1 - alpha, 2, 1 + x), 1 + (alpha - 1) * (1 + x) / 2)
        assert_allclose(hyp2f1_terminating(1, -1, 2, 2), 2)

    def test_hand_sum(self):
        assert_allclose(hyp2f1_terminating(2, -1, 2, 2), 3)

    def test_pole(self):
        with pytest.raises(ZeroDivisionError):
            hyp2f1_terminating(3, 0.5, -1, 0.2)
        # c = -m is not a pole: (c)_k for k <= m stays nonzero only up to k = m
        hyp2f1_terminating(2, 0.5, -2.0, 0.2)

    @pytest.mark.parametrize("method", ["direct", "reflected", "auto"])
    def test_methods_agree_at_moderate_z(self, method):
        got = hyp2f1_terminating(6, 0.3 - 0.2j, 2.5, 0.4 + 0.3j, method=method)
        assert_allclose(got, mp_terminating(6, 0.3 - 0.2j, 2.5, 0.4 + 0.3j), rtol=1e-13)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            hyp2f1_terminating(3, 0.5, 2, 0.1, method="taylor")

    def test_auto_beats_direct_near_z_two(self):
        # x close to -1 after a large sweep: the direct sum cancels badly
        n, alpha, g = 64, -0.5, 2.58
        z = 1 + np.exp(1j * g)
        ref = mp_terminating(n - 1, 1 - alpha, 2, z)
        auto = hyp2f1_terminating(n - 1, 1 - alpha, 2, z)
        assert abs(auto - ref) <= 1e-12 * max(abs(ref), 1)

    def test_against_mpmath_on_the_coefficient_range(self):
        worst = 0.0
        for alpha in (-0.75, 0.5, 1.25, 2.0):
            for g in np.linspace(-3.1, 3.1, 13):
                z = 1 + np.exp(1j * g)
                for n in (2, 9, 31, 64):
                    ref = mp_terminating(n - 1, 1 - alpha, 2, z)
                    got = hyp2f1_terminating(n - 1, 1 - alpha, 2, z)
                    scale = max(abs(ref), 1e-300)
                    worst = max(worst, abs(got - ref) / scale)
        assert worst < 1e-11


class TestEuler:
    def test_a_zero(self):
        assert hyp2f1_euler(0, 1.5, 2.5, 0.7) == 1

    def test_log_closed_form(self):
        assert_allclose(hyp2f1_euler(1, 1, 2, 0.3), -math.log(0.7) / 0.3, rtol=1e-12)
        assert_allclose(hyp2f1_euler(1, 1, 2, 0.3).real, 1.18891647979577, rtol=1e-12)

    def test_matches_terminating_at_b_in_unit_interval(self):
        # the polynomial F(1-n, 1-alpha; 2; 1+x) with 0 < 1-alpha < 2
        for alpha in (0.5, -0.5):
            for z in (1 + 1j, 1 + np.exp(2j)):
                got = hyp2f1_euler(1 - 5, 1 - alpha, 2, z)
                want = hyp2f1_terminating(4, 1 - alpha, 2, z)
                assert_allclose(got, want, rtol=1e-10)

    def test_generic_against_mpmath(self):
        got = hyp2f1_euler(0.7 + 0.2j, 0.4, 1.9, -0.8 + 0.5j)
        want = complex(mpmath.hyp2f1(0.7 + 0.2j, 0.4, 1.9, -0.8 + 0.5j))
        assert_allclose(got, want, rtol=1e-10)

    def test_preconditions(self):
        # b = 1 - 1.5 < 0 puts the Euler form out of reach
        with pytest.raises(ValueError, match="c > b > 0"):
            hyp2f1_euler(1 - 5, 1 - 1.5, 2, 1 + 1j)
        with pytest.raises(ValueError, match="cut"):
            hyp2f1_euler(0.5, 1, 2, 1.5)
        # polynomial case is fine on the cut
        assert_allclose(hyp2f1_euler(-2, 1, 3, 1.5), hyp2f1_terminating(2, 1, 3, 1.5))

    def test_singular_weight_polynomial(self):
        # b - 1 near -1 makes large Jacobi rules inaccurate; the node cap avoids them
        b = 0.109375
        assert_allclose(hyp2f1_euler(-4, b, b + 1, -1 + 1j),
                        mp_terminating(4, b, b + 1, -1 + 1j), rtol=1e-13)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 12), st.floats(0.1, 2.0), st.floats(0.2, 2.0),
           st.floats(-1.5, 1.5), st.floats(-1.5, 1.5))
    def test_agrees_with_terminating(self, m, b, gap, zr, zi):
        c = b + gap
        z = complex(zr, zi)
        want = hyp2f1_terminating(m, b, c, z)
        got = hyp2f1_euler(-m, b, c, z)
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


class TestCoefficients:
    def test_first(self):
        x = np.exp(0.9j)
        assert_allclose(coefficient_A(1, 1.3, x), 1.3 * (1 + x))
        assert_allclose(coefficient_B(1, 1.3, x), 1)

    def test_koebe_values(self):
        assert_allclose(coefficients_A(10, 2.0, 1.0).real, 4 * np.arange(1, 11), rtol=1e-12)
        b = [coefficient_B(n, 2.0, 1.0).real for n in range(1, 21)]
        assert_allclose(b, np.arange(1, 21), rtol=1e-12)

    def test_second_coefficient(self):
        assert_allclose(coefficient_A(2, 1.5, 1.0), 2 * 1.5**2)

    def test_accepts_parameter_object(self):
        p = UnitModulusParameter(0.3)
        assert_allclose(coefficient_A(4, 1.6, p), coefficient_A(4, 1.6, p.x))

    def test_vectorized(self):
        xs = np.exp(1j * np.linspace(-2, 2, 5))
        vec = coefficient_B(7, 1.4, xs)
        assert_allclose(vec, [coefficient_B(7, 1.4, x) for x in xs])

    @settings(max_examples=25, deadline=None)
    @given(st.floats(1.0001, 2.0), st.floats(-3.1, 3.1))
    def test_matches_series_power(self, alpha, g):
        x = complex(math.cos(g), math.sin(g))
        base = TruncatedSeries.from_coeffs([1, x], 50) / TruncatedSeries.from_coeffs([1, -1], 50)
        p = series_pow_real(base, alpha)
        got = coefficients_A(50, alpha, x)
        assert_allclose(got, p.coeffs[1:], rtol=1e-10, atol=1e-10 * np.abs(p.coeffs[1:]).max())

    def test_a_over_b_consistency(self):
        x = np.exp(1.1j)
        for n in range(1, 12):
            assert_allclose(coefficient_A(n, 1.8, x) / (1.8 * (1 + x)), coefficient_B(n, 1.8, x))


class TestDomination:
    def test_alpha_two(self):
        rep = domination_check(2.0, 30, gamma_grid(256, 1e-3))
        assert rep.passed
        assert_allclose(rep.worst_ratio, 1.0, atol=1e-12)

    def test_n_one_ratio_is_one(self):
        assert_allclose(domination_ratios(0.5, 1, gamma_grid(64, 1e-3)), [1.0])

    def test_alpha_one_is_trivial(self):
        rep = domination_check(1.0, 10, gamma_grid(8, 1e-3))
        assert rep.passed and "identically" in rep.notes

    def test_grid_must_avoid_minus_one(self):
        with pytest.raises(ValueError):
            domination_check(1.5, 5, [math.pi])

    def test_small_alpha_counterexample(self):
        # B_2(1/2, x) = 1 - (1 + x)/4; at x = 1 this is 1/2, near x = -1 it tends to 1
        x = np.exp(3.0j)
        assert_allclose(coefficient_B(2, 0.5, x), 1 - (1 + x) / 4)
        assert abs(coefficient_B(2, 0.5, x)) > abs(coefficient_B(2, 0.5, 1.0))
        rep = domination_check(0.5, 30, gamma_grid(256, 1e-3))
        assert not rep.passed
        assert rep.worst_ratio > 1.9

    def test_alpha_zero_even_n_is_infinite(self):
        # B_n(0, 1) = 0 for even n while B_n(0, x) is not identically zero
        assert_allclose(coefficient_B(2, 0.0, 1.0), 0, atol=1e-15)
        assert math.isinf(domination_ratios(0.0, 2, gamma_grid(16, 1e-3))[1])
