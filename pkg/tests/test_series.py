import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbra.algebra import Polynomial, factorial, poly_definite_integral, poly_eval
from umbra.classical import bernoulli_numbers_recurrence
from umbra.errors import CompositionError, OrderError, TruncationError
from umbra.series import (
    ZERO_ORDER,
    PowerSeries,
    bernoulli_g,
    compositional_inverse,
    exp_minus_one,
    integral_series,
    log1p_series,
    one,
    operator_apply,
    pairing,
    pairing_multinomial,
    series_compose,
    series_exp_linear,
    series_mul,
    series_order,
    series_reciprocal,
    t_series,
)

from .conftest import F, delta_series, invertible_series, polynomials, rationals, series

X = Polynomial.x()
xn = Polynomial.monomial


def test_series_order():
    assert series_order(t_series(8)) == 1
    assert series_order(PowerSeries([1, 1])) == 0
    assert series_order(PowerSeries([0], 8)) == ZERO_ORDER


def test_truncation_pads_and_cuts():
    f = PowerSeries([1, 2], 4)
    assert f.trunc == 4 and f.coeffs[2:] == (0, 0, 0)
    assert PowerSeries(range(10), 3).coeffs == (0, 1, 2, 3)


def test_mixed_truncation_takes_shorter():
    f = PowerSeries([1, 1, 1, 1, 1])
    g = PowerSeries([1, 1])
    assert (f * g).trunc == 1
    assert (f + g).trunc == 1


def test_mul_examples():
    f = PowerSeries([F(1, 2), 3, -1, 7])
    assert series_mul(one(3), f) == f
    assert series_mul(t_series(4), t_series(4)) == PowerSeries([0, 0, 1, 0, 0])
    assert series_mul(bernoulli_g(12), series_reciprocal(bernoulli_g(12))) == one(12)


def test_reciprocal_examples():
    assert series_reciprocal(one(5)) == one(5)
    assert series_reciprocal(PowerSeries([1, -1], 6)) == PowerSeries([1] * 7)
    inv = series_reciprocal(bernoulli_g(16))
    # EGF coefficients of t/(e^t - 1) are the Bernoulli numbers
    assert [inv.egf(k) for k in range(17)] == bernoulli_numbers_recurrence(16)
    with pytest.raises(OrderError):
        series_reciprocal(t_series(4))


def test_exp_linear():
    assert series_exp_linear(0, 5) == one(5)
    assert series_exp_linear(1, 3) == PowerSeries([1, 1, F(1, 2), F(1, 6)])
    for n in range(8):
        assert pairing(series_exp_linear(F(-2, 3), n), xn(n)) == F(-2, 3) ** n


def test_compose_examples():
    f = PowerSeries([3, F(1, 2), -1, 4, 0, 2])
    assert series_compose(f, t_series(5)) == f
    assert series_compose(PowerSeries([0, 0, 1], 6), PowerSeries([0, 2], 6)) == PowerSeries([0, 0, 4], 6)
    assert series_compose(exp_minus_one(1, 12), log1p_series(12)) == t_series(12)
    with pytest.raises(CompositionError):
        series_compose(f, one(5))


def test_compositional_inverse_examples():
    assert compositional_inverse(t_series(8)) == t_series(8)
    assert compositional_inverse(PowerSeries([0, 2], 8)) == PowerSeries([0, F(1, 2)], 8)
    inv = compositional_inverse(exp_minus_one(1, 12))
    assert inv == log1p_series(12)
    assert series_compose(exp_minus_one(1, 12), inv) == t_series(12)
    with pytest.raises(OrderError):
        compositional_inverse(PowerSeries([0, 0, 1], 6))
    with pytest.raises(OrderError):
        compositional_inverse(one(6))


def test_operator_apply_examples():
    from umbra.classical import bernoulli_poly, bernoulli_poly_order

    p = Polynomial([1, F(2, 3), -5, 7])
    assert operator_apply(one(5), p) == p
    for n in range(1, 13):
        assert operator_apply(t_series(12), bernoulli_poly(n)) == n * bernoulli_poly(n - 1)
    for r in range(1, 4):
        for n in range(9):
            assert operator_apply(bernoulli_g(10), bernoulli_poly_order(n, r)) == bernoulli_poly_order(n, r - 1)


def test_pairing_examples():
    t2 = PowerSeries([0, 0, 1], 6)
    assert pairing(t2, xn(2)) == 2
    assert pairing(t2, xn(3)) == 0
    inv = series_reciprocal(bernoulli_g(12))
    bern = bernoulli_numbers_recurrence(12)
    for n in range(13):
        assert pairing(inv, xn(n)) == bern[n]


def test_pairing_rejects_short_truncation():
    with pytest.raises(TruncationError):
        pairing(PowerSeries([1, 1, 1]), xn(3))
    with pytest.raises(TruncationError):
        operator_apply(PowerSeries([1, 1, 1]), xn(3))


def test_pairing_multinomial_examples():
    t = t_series(4)
    assert pairing_multinomial([t, t], 2) == 2
    assert pairing_multinomial([t, t], 2) == pairing(t * t, xn(2))
    f = PowerSeries([F(1, 3), -2, 5, F(7, 2), 1])
    for n in range(5):
        assert pairing_multinomial([f], n) == pairing(f, xn(n))


def test_pairing_multinomial_gives_higher_order_numbers():
    from umbra.classical import bernoulli_number_order_multinomial

    inv = series_reciprocal(bernoulli_g(8))
    for r in range(1, 5):
        for n in range(9):
            assert pairing_multinomial([inv] * r, n) == bernoulli_number_order_multinomial(n, r)


@given(st.integers(0, 12), st.integers(0, 12))
def test_tk_xn_pairing(k, n):
    expected = factorial(n) if n == k else 0
    assert pairing(PowerSeries.monomial_t(k, 12), xn(n)) == expected


@given(series(), series(), polynomials(10))
@settings(max_examples=50)
def test_product_duality(f, g, p):
    assert pairing(f * g, p) == pairing(f, operator_apply(g, p))


@given(polynomials(10), rationals)
@settings(max_examples=50)
def test_integral_functional(p, y):
    assert pairing(integral_series(y, 12), p) == poly_definite_integral(p, 0, y)


@given(series(), polynomials(9))
@settings(max_examples=50)
def test_derivative_duality(f, p):
    # t-derivative written out independently of PowerSeries.derivative
    df = PowerSeries([(k + 1) * f.coeffs[k + 1] for k in range(f.trunc)])
    assert pairing(f, X * p) == pairing(df, p)
    assert df == f.derivative()


@given(polynomials(10), rationals)
@settings(max_examples=50)
def test_evaluation_functional(p, y):
    assert pairing(exp_minus_one(y, 12), p) == poly_eval(p, y) - poly_eval(p, 0)


@given(series(8), series(8), series(8), st.integers(0, 8))
@settings(max_examples=40)
def test_multinomial_matches_product(f, g, h, n):
    assert pairing_multinomial([f, g], n) == pairing(f * g, xn(n))
    assert pairing_multinomial([f, g, h], n) == pairing(f * g * h, xn(n))


@given(delta_series())
@settings(max_examples=40)
def test_compositional_inverse_round_trip(f):
    inv = compositional_inverse(f)
    assert series_compose(f, inv) == t_series(12)
    assert series_compose(inv, f) == t_series(12)


@given(invertible_series())
@settings(max_examples=40)
def test_reciprocal_round_trip(f):
    assert f * series_reciprocal(f) == one(12)


@given(series(6), st.integers(0, 6), polynomials(6))
def test_egf_invariant(f, k, p):
    assert pairing(f, xn(k)) == math.factorial(k) * f.coeffs[k] == f.egf(k)
    # linearity in the polynomial argument
    assert pairing(f, p + xn(k)) == pairing(f, p) + f.egf(k)
