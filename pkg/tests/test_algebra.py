from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbra.algebra import (
    NEG_INF,
    Polynomial,
    binomial,
    combinatorial,
    compositions,
    factorial,
    fmt_rational,
    format_poly,
    multinomial,
    parse_rational,
    poly_definite_integral,
    poly_derivative,
    poly_eval,
    poly_shift,
)
from umbra.errors import DomainError

from .conftest import F, polynomials, rationals

X = Polynomial.x()
B2 = Polynomial([F(1, 6), -1, 1])  # x^2 - x + 1/6
B3 = Polynomial([0, F(1, 2), F(-3, 2), 1])


def test_rational_rendering():
    assert fmt_rational(Fraction(6, 3)) == "2"
    assert fmt_rational(Fraction(-3, 6)) == "-1/2"
    assert fmt_rational(0) == "0"
    assert parse_rational("-691/2730") == Fraction(-691, 2730)
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational("0.5")


def test_zero_polynomial_shape():
    z = Polynomial([0, 0, 0])
    assert z.coeffs == ()
    assert z.degree == NEG_INF
    assert z.degree + 3 == NEG_INF
    assert Polynomial([1, 2, 0]).degree == 1


def test_format_poly():
    assert format_poly(Polynomial([F(-1, 30), 0, 1, -2, 1])) == "x^4 - 2*x^3 + x^2 - 1/30"
    assert format_poly(-X) == "-x"
    assert format_poly(Polynomial()) == "0"


@pytest.mark.parametrize(
    "p, a, expected",
    [
        (Polynomial(), 5, 0),
        (B2, 0, F(1, 6)),
        (X, F(3, 2), F(3, 2)),
        (B2, 1, F(1, 6)),
    ],
)
def test_poly_eval(p, a, expected):
    assert poly_eval(p, a) == expected


def test_poly_derivative_examples():
    assert poly_derivative(X**3, 1) == 3 * X**2
    assert poly_derivative(X**3, 4) == Polynomial()
    assert poly_derivative(B3, 0) is B3
    # B_3' = 3 B_2, termwise differentiation
    assert poly_derivative(B3, 1) == 3 * B2


def test_poly_definite_integral_examples():
    assert poly_definite_integral(Polynomial([1]), 0, 1) == 1
    assert poly_definite_integral(B3, 0, 1) == 0
    assert poly_definite_integral(X**2, 0, 1) == F(1, 3)


def test_poly_shift_examples():
    assert poly_shift(X**2, 0) == X**2
    assert poly_shift(X**2, 1) == X**2 + 2 * X + 1
    assert poly_shift(B2, 1) == B2 + 2 * X


def test_combinatorial_examples():
    assert combinatorial("factorial", [0]) == 1
    assert combinatorial("binomial", [4, 2]) == 6
    assert combinatorial("multinomial", [3, 1, 1, 1]) == 6
    with pytest.raises(DomainError):
        combinatorial("factorial", [-1])
    with pytest.raises(DomainError):
        multinomial(3, [1, 1])
    with pytest.raises(DomainError):
        binomial(-2, 1)


def test_compositions_count():
    # stars and bars
    assert len(list(compositions(6, 3))) == binomial(8, 2)
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 0)) == []


@given(polynomials(), polynomials(), st.integers(0, 12))
def test_derivative_is_linear(p, q, k):
    assert poly_derivative(p + q, k) == poly_derivative(p, k) + poly_derivative(q, k)


@given(polynomials(max_degree=20), rationals, rationals)
@settings(max_examples=60)
def test_fundamental_theorem(p, a, b):
    assert poly_definite_integral(poly_derivative(p, 1), a, b) == poly_eval(p, b) - poly_eval(p, a)


@given(polynomials(), rationals)
def test_shift_round_trip(p, c):
    assert poly_shift(poly_shift(p, c), -c) == p


@given(polynomials(max_degree=6), rationals, rationals)
def test_shift_matches_evaluation(p, c, a):
    assert poly_eval(poly_shift(p, c), a) == poly_eval(p, a + c)


def test_binomial_is_two_part_multinomial():
    for n in range(31):
        for k in range(n + 1):
            assert binomial(n, k) == multinomial(n, [k, n - k])


@given(polynomials(max_degree=5), polynomials(max_degree=5), rationals)
def test_ring_ops_evaluate_pointwise(p, q, a):
    assert poly_eval(p * q, a) == poly_eval(p, a) * poly_eval(q, a)
    assert poly_eval(p - q, a) == poly_eval(p, a) - poly_eval(q, a)
    assert poly_eval(p**3, a) == poly_eval(p, a) ** 3


def test_factorial_matches_product():
    acc = 1
    for n in range(1, 15):
        acc *= n
        assert factorial(n) == acc


def test_polynomial_is_immutable():
    with pytest.raises(AttributeError):
        X.coeffs = ()
