import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from concave_dirichlet.series import (
    TruncatedSeries,
    dirichlet_parseval,
    evaluate,
    parseval_tail_bound,
    series_compose,
    series_derivative,
    series_div,
    series_exp,
    series_log,
    series_mul,
    series_pow_real,
    series_reciprocal,
    series_shift_down,
)

N = 32

small_complex = st.complex_numbers(max_magnitude=0.3, allow_nan=False, allow_infinity=False)


def unit_const_series():
    # 1 + small perturbation, so principal powers and logs are well defined
    return st.lists(small_complex, min_size=1, max_size=6).map(
        lambda c: TruncatedSeries.from_coeffs([1.0] + c, N))


def test_coeffs_are_read_only():
    s = TruncatedSeries.from_coeffs([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_rejects_empty_and_nonfinite():
    with pytest.raises(ValueError):
        TruncatedSeries([])
    with pytest.raises(ValueError):
        TruncatedSeries([1.0, np.nan])


def test_from_coeffs_pads_and_truncates():
    assert TruncatedSeries.from_coeffs([1, 2], 4).order == 4
    assert_allclose(TruncatedSeries.from_coeffs([1, 2, 3, 4], 1).coeffs, [1, 2])


def test_mul_matches_numpy_polynomial_product():
    rng = np.random.default_rng(0)
    a = rng.normal(size=N + 1) + 1j * rng.normal(size=N + 1)
    b = rng.normal(size=N + 1)
    got = series_mul(TruncatedSeries(a), TruncatedSeries(b)).coeffs
    want = np.polynomial.polynomial.polymul(a, b)[: N + 1]
    assert_allclose(got, want, rtol=1e-13, atol=1e-12)


def test_mismatched_orders_raise():
    with pytest.raises(ValueError, match="orders differ"):
        series_mul(TruncatedSeries.identity(4), TruncatedSeries.identity(5))


def test_reciprocal_of_one_minus_z_is_geometric():
    g = series_reciprocal(TruncatedSeries.from_coeffs([1, -1], N))
    assert_allclose(g.coeffs, np.ones(N + 1))


def test_reciprocal_needs_nonzero_constant():
    with pytest.raises(ZeroDivisionError):
        series_reciprocal(TruncatedSeries.identity(N))


def test_shift_down():
    s = series_shift_down(TruncatedSeries.from_coeffs([0, 1, 2], 4))
    assert_allclose(s.coeffs, [1, 2, 0, 0, 0])
    with pytest.raises(ValueError):
        series_shift_down(TruncatedSeries.from_coeffs([1, 1], 4))


def test_negative_power_gives_binomial_coefficients():
    g = series_pow_real(TruncatedSeries.from_coeffs([1, -1], N), -2.0)
    assert_allclose(g.coeffs.real, np.arange(1, N + 2), rtol=1e-13)


def test_koebe_kernel_square():
    # ((1+z)/(1-z))^2 = 1 + sum 4n z^n
    base = TruncatedSeries.from_coeffs([1, 1], N) / TruncatedSeries.from_coeffs([1, -1], N)
    g = series_pow_real(base, 2.0)
    assert_allclose(g.coeffs[1:].real, 4 * np.arange(1, N + 1), rtol=1e-12)


def test_power_zero_and_branch_point():
    f = TruncatedSeries.from_coeffs([2, 1], 8)
    assert_allclose(series_pow_real(f, 0.0).coeffs, [1] + [0] * 8)
    with pytest.raises(ValueError, match="branch point"):
        series_pow_real(TruncatedSeries.identity(8), 0.5)


def test_pow_uses_principal_branch_of_constant():
    f = TruncatedSeries.constant(-1.0 + 0j, 3)
    assert_allclose(series_pow_real(f, 0.5)[0], 1j, atol=1e-15)


@settings(max_examples=40, deadline=None)
@given(unit_const_series(), st.floats(-2, 2), st.floats(-2, 2))
def test_power_laws(f, a, b):
    lhs = series_pow_real(f, a) * series_pow_real(f, b)
    rhs = series_pow_real(f, a + b)
    assert_allclose(lhs.coeffs, rhs.coeffs, rtol=1e-9, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(unit_const_series())
def test_exp_log_roundtrip(f):
    assert_allclose(series_exp(series_log(f)).coeffs, f.coeffs, rtol=1e-10, atol=1e-10)


@settings(max_examples=30, deadline=None)
@given(unit_const_series())
def test_division_inverts_multiplication(f):
    g = TruncatedSeries.from_coeffs([3, 1, -2], N)
    assert_allclose(series_div(f * g, g).coeffs, f.coeffs, rtol=1e-9, atol=1e-9)


def test_compose_against_pointwise_evaluation():
    f = series_reciprocal(TruncatedSeries.from_coeffs([1, -1], N))  # 1/(1-w)
    phi = TruncatedSeries.from_coeffs([0, 0.5, 0.25], N)
    h = series_compose(f, phi)
    z = 0.2 + 0.1j
    w = 0.5 * z + 0.25 * z * z
    assert_allclose(h(z), 1 / (1 - w), rtol=1e-12)


def test_compose_needs_vanishing_inner_series():
    with pytest.raises(ValueError):
        series_compose(TruncatedSeries.identity(4), TruncatedSeries.from_coeffs([1, 1], 4))


def test_derivative_lowers_order():
    d = series_derivative(TruncatedSeries.from_coeffs([5, 1, 2, 3]))
    assert d.order == 2
    assert_allclose(d.coeffs, [1, 4, 9])


def test_evaluate_vectorized_and_warns_outside_disk():
    s = TruncatedSeries.from_coeffs([1, 2, 3])
    z = np.array([0.1, -0.5j])
    assert_allclose(evaluate(s, z), 1 + 2 * z + 3 * z * z)
    with pytest.warns(UserWarning):
        evaluate(s, 1.5)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        evaluate(s, 0.99)


def test_parseval_identity_and_radius_check():
    assert_allclose(dirichlet_parseval(TruncatedSeries.identity(8), 0.5), math.pi / 4)
    with pytest.raises(ValueError):
        dirichlet_parseval(TruncatedSeries.identity(8), 1.5)


def test_tail_bound_dominates_true_tail():
    order, r = 40, 0.75
    full = TruncatedSeries.from_function(lambda n: n + 1, 2000)
    short = TruncatedSeries.from_function(lambda n: n + 1, order)
    true_tail = dirichlet_parseval(full, r) - dirichlet_parseval(short, r)
    bound = parseval_tail_bound(lambda n: n + 1.0, order, r)
    assert true_tail <= bound
    assert bound <= true_tail * (1 + 1e-6)
