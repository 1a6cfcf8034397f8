import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbra.algebra import Polynomial, binomial
from umbra.classical import (
    bernoulli_number_order,
    bernoulli_poly,
    bernoulli_poly_order,
    euler_poly,
)
from umbra.errors import DomainError
from umbra.identities import (
    euler_in_bernoulli,
    euler_in_bernoulli_difference,
    expand_bernoulli_basis,
    expand_bernoulli_basis_pairing,
    expand_bernoulli_order_basis,
    product_expansion_check,
    random_polynomial,
    theorem4_coefficient,
    theorem4_coefficients,
    verify_all,
)
from umbra.sheffer import expand_in_sheffer, named_basis

from .conftest import F, polynomials

xn = Polynomial.monomial


def unit(n):
    return tuple(1 if k == n else 0 for k in range(n + 1))


def test_expand_bernoulli_basis_examples():
    for n in range(10):
        assert expand_bernoulli_basis(bernoulli_poly(n)).coeffs == unit(n)
    # b_k = C(2,k) * int_0^1 u^(2-k) du
    expected = tuple(binomial(2, k) * F(1, 3 - k) for k in range(3))
    assert expected == (F(1, 3), 2 * F(1, 2), 1)
    exp = expand_bernoulli_basis(xn(2))
    assert exp.coeffs == (F(1, 3), 1, 1)
    assert exp.recombine() == xn(2)
    assert expand_bernoulli_basis(Polynomial()).coeffs == ()


@given(polynomials(12))
@settings(max_examples=30, deadline=None)
def test_theorem2_routes_agree(p):
    exp = expand_bernoulli_basis(p)
    assert exp.recombine() == p
    assert exp.coeffs == expand_in_sheffer(p, named_basis("bernoulli")).coeffs
    assert exp.coeffs == expand_bernoulli_basis_pairing(p)


def test_corollary_closed_form():
    for r in range(1, 5):
        for n in range(11):
            got = expand_bernoulli_basis(bernoulli_poly_order(n, r)).coeffs
            assert got == tuple(binomial(n, k) * bernoulli_number_order(n - k, r - 1) for k in range(n + 1))


def test_expand_order_basis_examples():
    for r in range(1, 4):
        for n in range(8):
            assert expand_bernoulli_order_basis(bernoulli_poly_order(n, r), r).coeffs == unit(n)
    for r in range(1, 4):
        for n in range(8):
            assert expand_bernoulli_order_basis(xn(n), r).recombine() == xn(n)
    with pytest.raises(DomainError):
        expand_bernoulli_order_basis(xn(2), 0)


@given(polynomials(10), st.integers(1, 4))
@settings(max_examples=20, deadline=None)
def test_theorem3_round_trip(p, r):
    assert expand_bernoulli_order_basis(p, r).recombine() == p


def test_theorem4_small_case():
    # k=0 < r: B_2(1) - B_2(0) = 0; k=1 >= r: B_1(1) - B_1(0) = 1
    assert theorem4_coefficients(1, 1).coeffs == (0, 1)
    for n in range(10):
        assert theorem4_coefficients(n, 1).coeffs == unit(n)


def test_theorem4_matches_pairing_route():
    assert theorem4_coefficients(4, 2).coeffs == expand_bernoulli_order_basis(bernoulli_poly(4), 2).coeffs
    for r in range(1, 5):
        for n in range(11):
            closed = theorem4_coefficients(n, r)
            assert closed.coeffs == expand_bernoulli_order_basis(bernoulli_poly(n), r).coeffs
            assert closed.recombine() == bernoulli_poly(n)


def test_theorem4_low_branch_vanishes_above_degree():
    for r in range(2, 6):
        for n in range(r - 1):
            for k in range(n + 1, r):
                assert theorem4_coefficient(n, r, k) == 0


def test_euler_in_bernoulli_examples():
    assert euler_in_bernoulli(0).coeffs == (1,)
    assert euler_in_bernoulli(1).coeffs == (0, 1)
    assert euler_in_bernoulli(1).recombine() == Polynomial([F(-1, 2), 1])
    for n in range(16):
        exp = euler_in_bernoulli(n)
        assert exp.recombine() == euler_poly(n)
        assert exp.coeffs == expand_bernoulli_basis(euler_poly(n)).coeffs
        assert exp.coeffs == euler_in_bernoulli_difference(n)


def test_product_examples():
    rep = product_expansion_check(2, 0, 1)
    assert rep.passed
    assert product_expansion_check(4, 1, 2).passed
    assert product_expansion_check(3, 1, family="euler").passed
    with pytest.raises(DomainError):
        product_expansion_check(2, 3, 1)
    with pytest.raises(DomainError):
        product_expansion_check(2, 1, family="hermite")


def test_product_check_reports_counterexample(monkeypatch):
    import umbra.identities as ids

    monkeypatch.setattr(ids, "product_rhs_euler", lambda n, m: Polynomial([1]))
    rep = ids.product_expansion_check(2, 0, family="euler")
    assert not rep.passed
    assert rep.failures[0].difference is not None


def test_products_all_small():
    for n in range(9):
        for m in range(n + 1):
            for r in range(1, 4):
                assert product_expansion_check(n, m, r).passed
            assert product_expansion_check(n, m, family="euler").passed


def test_verify_all_degenerate():
    rep = verify_all(0, 1)
    assert rep.passed
    assert rep.ranges == {"max_n": 0, "max_r": 1}


def test_verify_all_is_idempotent():
    a = verify_all(3, 2, seed=7, random_instances=5).to_json()
    b = verify_all(3, 2, seed=7, random_instances=5).to_json()
    assert a == b


def test_random_polynomial_is_seeded():
    a = [random_polynomial(random.Random(3), 8) for _ in range(3)]
    b = [random_polynomial(random.Random(3), 8) for _ in range(3)]
    assert a == b
