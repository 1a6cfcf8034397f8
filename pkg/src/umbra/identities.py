"""Bernoulli-basis expansions and the batch verification driver.

Every expansion here has at least two routes (closed form, integral form,
pairing form) and ``verify_all`` checks that they agree exactly and that each
recombines to the polynomial it expands.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    Polynomial,
    binomial,
    factorial,
    poly_definite_integral,
    poly_derivative,
    poly_eval,
    poly_shift,
)
from .classical import (
    bernoulli_number,
    bernoulli_number_order,
    bernoulli_number_order_multinomial,
    bernoulli_numbers_recurrence,
    bernoulli_poly,
    bernoulli_poly_order,
    euler_number,
    euler_numbers_recurrence,
    euler_poly,
    family_integral_identity_check,
    kronecker_checks,
)
from .errors import DomainError
from .report import IdentityReport
from .series import (
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
    series_reciprocal,
    t_series,
)
from .sheffer import (
    BasisExpansion,
    ShefferPair,
    appell_poly,
    expand_functional,
    expand_in_sheffer,
    named_basis,
    recombine_functional,
    sheffer_polys,
)


def expand_bernoulli_basis(p: Polynomial) -> BasisExpansion:
    """Coefficients of ``p`` in the B_k(x) basis: ``b_k = (1/k!) int_0^1 p^(k)(u) du``."""
    basis = named_basis("bernoulli")
    if p.is_zero():
        return BasisExpansion(basis, ())
    coeffs = tuple(
        poly_definite_integral(poly_derivative(p, k), 0, 1) / factorial(k)
        for k in range(p.degree + 1)
    )
    return BasisExpansion(basis, coeffs)


def expand_bernoulli_basis_pairing(p: Polynomial) -> tuple:
    """``b_k = (1/k!) <(e^t-1)/t | p^(k)(x)>``, the middle form of the integral route."""
    if p.is_zero():
        return ()
    g = bernoulli_g(max(p.degree, 1))
    return tuple(pairing(g, poly_derivative(p, k)) / factorial(k) for k in range(p.degree + 1))


def expand_bernoulli_order_basis(p: Polynomial, r: int) -> BasisExpansion:
    """Coefficients in the B_k^{(r)}(x) basis: ``(1/k!) <((e^t-1)/t)^r t^k | p>``."""
    if r < 1:
        raise DomainError("order r must be a positive integer")
    return expand_in_sheffer(p, named_basis("bernoulli-order", r))


def _alternating_sum(r: int, m: int) -> Fraction:
    """``sum_j C(r, j) (-1)^(r-j) B_m(j)`` for j = 0..r, i.e. <(e^t-1)^r | B_m(x)>."""
    bm = bernoulli_poly(m)
    return sum(
        (binomial(r, j) * (-1) ** (r - j) * poly_eval(bm, j) for j in range(r + 1)),
        Fraction(0),
    )


def theorem4_coefficient(n: int, r: int, k: int) -> Fraction:
    """Closed-form coefficient of B_k^{(r)}(x) in B_n(x), with separate k < r and k >= r branches."""
    if n < 0 or r < 1 or k < 0:
        raise DomainError("need n >= 0, r >= 1, k >= 0")
    m = n + r - k
    if k < r:
        scale = Fraction(binomial(r, k), factorial(r) * binomial(m, r - k))
    else:
        if k - r > n:
            return Fraction(0)
        scale = Fraction(binomial(n, k - r), factorial(r) * binomial(k, r))
    return scale * _alternating_sum(r, m)


def theorem4_coefficients(n: int, r: int) -> BasisExpansion:
    """B_n(x) expanded in the order-r Bernoulli basis by the closed forms, k = 0..n."""
    coeffs = tuple(theorem4_coefficient(n, r, k) for k in range(n + 1))
    return BasisExpansion(named_basis("bernoulli-order", r), coeffs)


def euler_in_bernoulli(n: int) -> BasisExpansion:
    """``E_n(x) = -2 sum_k C(n,k) E_{n-k+1}/(n-k+1) B_k(x)``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    coeffs = tuple(
        -2 * binomial(n, k) * euler_number(n - k + 1) / (n - k + 1) for k in range(n + 1)
    )
    return BasisExpansion(named_basis("bernoulli"), coeffs)


def euler_in_bernoulli_difference(n: int) -> tuple:
    """Same coefficients from ``C(n,k) (E_{n-k+1}(1) - E_{n-k+1}) / (n-k+1)``."""
    return tuple(
        binomial(n, k)
        * (poly_eval(euler_poly(n - k + 1), 1) - euler_number(n - k + 1))
        / (n - k + 1)
        for k in range(n + 1)
    )


@lru_cache(maxsize=None)
def _bernoulli_product(p: int, q: int) -> Polynomial:
    if p > q:
        return _bernoulli_product(q, p)
    return bernoulli_poly(p) * bernoulli_poly(q)


def product_rhs_bernoulli_order(n: int, m: int, r: int) -> Polynomial:
    """Double-sum right side for B_n^{(r)}(x) B_{n-m}^{(r)}(x) over products B_p B_{k-p}."""
    out = Polynomial()
    for k in range(2 * n - m + 1):
        for p in range(k + 1):
            if p > n - m or k - p > n:
                continue  # a binomial vanishes
            c = (
                binomial(n - m, p)
                * binomial(n, k - p)
                * bernoulli_number_order(n - m - p, r - 1)
                * bernoulli_number_order(n - k + p, r - 1)
            )
            if c:
                out = out + _bernoulli_product(p, k - p) * c
    return out


def product_rhs_euler(n: int, m: int) -> Polynomial:
    """Double-sum right side for E_n(x) E_{n-m}(x) over products B_l B_{k-l}."""
    out = Polynomial()
    for k in range(2 * n - m + 1):
        for l in range(k + 1):
            if l > n - m or k - l > n:
                continue
            c = (
                4
                * binomial(n - m, l)
                * binomial(n, k - l)
                * euler_number(n - m - l + 1)
                * euler_number(n - k + l + 1)
                / ((n - m - l + 1) * (n - k + l + 1))
            )
            if c:
                out = out + _bernoulli_product(l, k - l) * c
    return out


def product_expansion_check(n: int, m: int, r: int = 1, family: str = "bernoulli_order") -> IdentityReport:
    """Compare a direct product of two family polynomials with its double-sum rewrite."""
    if m < 0 or m > n:
        raise DomainError("need 0 <= m <= n")
    report = IdentityReport()
    if family == "bernoulli_order":
        if r < 1:
            raise DomainError("order r must be a positive integer")
        lhs = bernoulli_poly_order(n, r) * bernoulli_poly_order(n - m, r)
        report.add("product-bernoulli-order", {"n": n, "m": m, "r": r}, lhs - product_rhs_bernoulli_order(n, m, r))
    elif family == "euler":
        lhs = euler_poly(n) * euler_poly(n - m)
        report.add("product-euler", {"n": n, "m": m}, lhs - product_rhs_euler(n, m))
    else:
        raise DomainError(f"unknown family {family!r}")
    return report


# verification driver


def random_polynomial(rng: random.Random, max_degree: int) -> Polynomial:
    deg = rng.randint(0, max_degree)
    return Polynomial(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(deg + 1))


def random_delta_series(rng: random.Random, trunc: int) -> PowerSeries:
    lead = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    rest = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(trunc - 1)]
    return PowerSeries([0, lead] + rest)


def _random_series(rng: random.Random, trunc: int) -> PowerSeries:
    return PowerSeries(Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(trunc + 1))


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def check_umbral_axioms(rng: random.Random, instances: int, trunc: int = 12, max_degree: int = 10) -> IdentityReport:
    """Seeded random checks of the pairing axioms of the umbral algebra."""
    report = IdentityReport()
    x = Polynomial.x()
    for i in range(instances):
        f, g = _random_series(rng, trunc), _random_series(rng, trunc)
        p = random_polynomial(rng, max_degree)
        y = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        k, n = rng.randint(0, trunc), rng.randint(0, trunc)
        params = {"i": i}
        report.add(
            "axiom-tk-xn",
            params,
            pairing(PowerSeries.monomial_t(k, trunc), Polynomial.monomial(n)) - factorial(n) * _delta(n, k),
        )
        report.add("axiom-product-duality", params, pairing(f * g, p) - pairing(f, operator_apply(g, p)))
        report.add(
            "axiom-integral", params, pairing(integral_series(y, trunc), p) - poly_definite_integral(p, 0, y)
        )
        q = p if p.degree < trunc else Polynomial(p.coeffs[:trunc])
        report.add("axiom-derivative", params, pairing(f, x * q) - pairing(f.derivative(), q))
        report.add("axiom-evaluation", params, pairing(exp_minus_one(y, trunc), p) - (poly_eval(p, y) - poly_eval(p, 0)))
        h = _random_series(rng, trunc)
        nn = rng.randint(0, trunc)
        report.add(
            "axiom-multinomial",
            params,
            pairing_multinomial([f, g, h], nn) - pairing(f * g * h, Polynomial.monomial(nn)),
        )
    return report


def verify_all(max_n: int = 12, max_r: int = 4, seed: int = 0, random_instances: int = 50) -> IdentityReport:
    """Run every identity over ``n <= max_n`` and ``1 <= r <= max_r``.

    Failures are entries in the report, never exceptions. Random instances
    come from ``random.Random(seed)`` so the report is reproducible.
    """
    if max_n < 0 or max_r < 1:
        raise DomainError("need max_n >= 0 and max_r >= 1")
    rng = random.Random(seed)
    report = IdentityReport(seed=seed, ranges={"max_n": max_n, "max_r": max_r})
    add = report.add
    rs = range(1, max_r + 1)
    ns = range(max_n + 1)
    xn = Polynomial.monomial
    trunc = max_n + max_r + 1

    # numbers: series route against recurrences
    b_rec = bernoulli_numbers_recurrence(max_n)
    e_rec = euler_numbers_recurrence(max_n)
    for n in ns:
        add("bernoulli-number-routes", {"n": n}, bernoulli_number(n) - b_rec[n])
        add("euler-number-routes", {"n": n}, euler_number(n) - e_rec[n])
        b, e = kronecker_checks(n)
        add("kronecker-bernoulli", {"n": n}, b)
        add("kronecker-euler", {"n": n}, e)
        add("bernoulli-poly-routes", {"n": n}, bernoulli_poly(n) - appell_poly(bernoulli_g(n), n))
        add("euler-poly-monic", {"n": n}, euler_poly(n).coeff(n) - 1)

    # operator identities of B_n^{(r)}
    g = bernoulli_g(trunc)
    t = t_series(trunc)
    g_inv = series_reciprocal(g)
    for r in rs:
        for n in ns:
            prm = {"n": n, "r": r}
            b = bernoulli_poly_order(n, r)
            add("appell-order-routes", prm, b - operator_apply(series_reciprocal(g**r), xn(n)))
            add("appell-inverse", prm, operator_apply(g**r, b) - xn(n))
            add("lowering", prm, operator_apply(t, b) - (n * bernoulli_poly_order(n - 1, r) if n else 0))
            add("raising", prm, operator_apply(t, bernoulli_poly_order(n + 1, r) * Fraction(1, n + 1)) - b)
            add("order-reduction", prm, operator_apply(g, b) - bernoulli_poly_order(n, r - 1))
            add("fixed-point", prm, operator_apply(g_inv, operator_apply(g, b)) - b)
            if n:
                add("difference", prm, poly_shift(b, 1) - b - n * bernoulli_poly_order(n - 1, r - 1))
            add("multinomial-numbers", prm, bernoulli_number_order_multinomial(n, r) - bernoulli_number_order(n, r))
            add(
                "multinomial-pairing",
                prm,
                pairing_multinomial([g_inv] * r, n) - bernoulli_number_order(n, r),
            )
            add("pairing-order-number", prm, pairing(g_inv**r, xn(n)) - bernoulli_number_order(n, r))
            for y in (Fraction(1), Fraction(1, 2), Fraction(-3, 2), Fraction(2)):
                report.extend(family_integral_identity_check(n, r, y))

    # Sheffer biorthogonality and lowering
    pairs = {"bernoulli": ShefferPair(bernoulli_g(max_n + 1), t_series(max_n + 1))}
    for r in rs:
        pairs[f"bernoulli-order:{r}"] = ShefferPair(bernoulli_g(max_n + 1) ** r, t_series(max_n + 1))
    pairs["falling-factorial"] = ShefferPair(one(max_n + 1), exp_minus_one(1, max_n + 1))
    for name, pair in pairs.items():
        polys = sheffer_polys(pair, max_n)
        gfk = pair.g
        for k in ns:
            for n in ns:
                add(
                    "biorthogonality",
                    {"pair": name, "n": n, "k": k},
                    pairing(gfk.truncate(max(n, 1)), polys[n]) - factorial(n) * _delta(n, k),
                )
            gfk = gfk * pair.f
        for n in ns:
            lowered = operator_apply(pair.f.truncate(max(n, 1)), polys[n])
            add("sheffer-lowering", {"pair": name, "n": n}, lowered - (n * polys[n - 1] if n else 0))
        fbar = compositional_inverse(pair.f)
        add("inverse-right", {"pair": name}, series_compose(pair.f, fbar) - t_series(pair.f.trunc))
        add("inverse-left", {"pair": name}, series_compose(fbar, pair.f) - t_series(pair.f.trunc))

    for i in range(random_instances):
        f = random_delta_series(rng, 12)
        fbar = compositional_inverse(f)
        add("inverse-random", {"i": i}, series_compose(f, fbar) - t_series(12))
        add("inverse-random-left", {"i": i}, series_compose(fbar, f) - t_series(12))
    add("inverse-log", {}, series_compose(exp_minus_one(1, 12), log1p_series(12)) - t_series(12))

    # functional expansions
    bern = named_basis("bernoulli")
    for y in (Fraction(0), Fraction(1), Fraction(-2, 3)):
        h = series_exp_linear(y, max_n)
        d = expand_functional(h, bern, max_n)
        for k in ns:
            add("functional-exp", {"y": y, "k": k}, d[k] - poly_eval(bernoulli_poly(k), y) / factorial(k))
        add("functional-recombine", {"y": y}, _series_diff(recombine_functional(d, bern.pair), h))

    # Theorem 2 and the corollary
    for i in range(random_instances):
        p = random_polynomial(rng, max_n)
        exp_int = expand_bernoulli_basis(p)
        exp_pair = expand_in_sheffer(p, bern)
        prm = {"i": i}
        add("expand-bernoulli-recombine", prm, exp_int.recombine() - p)
        add("expand-bernoulli-routes", prm, _coeff_diff(exp_int.coeffs, exp_pair.coeffs))
        add("expand-bernoulli-middle", prm, _coeff_diff(exp_int.coeffs, expand_bernoulli_basis_pairing(p)))
    for r in rs:
        for n in ns:
            prm = {"n": n, "r": r}
            got = expand_bernoulli_basis(bernoulli_poly_order(n, r)).coeffs
            want = tuple(binomial(n, k) * bernoulli_number_order(n - k, r - 1) for k in range(n + 1))
            add("corollary", prm, _coeff_diff(got, want))

    # Theorem 3 and Theorem 4
    for r in rs:
        for i in range(random_instances // max_r + 1):
            p = random_polynomial(rng, max_n)
            add("expand-order-recombine", {"r": r, "i": i}, expand_bernoulli_order_basis(p, r).recombine() - p)
        for n in ns:
            prm = {"n": n, "r": r}
            closed = theorem4_coefficients(n, r)
            add("theorem4-routes", prm, _coeff_diff(closed.coeffs, expand_bernoulli_order_basis(bernoulli_poly(n), r).coeffs))
            add("theorem4-recombine", prm, closed.recombine() - bernoulli_poly(n))
            for k in range(n + 1, r):
                add("theorem4-vanishing", {"n": n, "r": r, "k": k}, theorem4_coefficient(n, r, k))
            add("basis-self", prm, _coeff_diff(expand_bernoulli_order_basis(bernoulli_poly_order(n, r), r).coeffs, _unit(n)))

    # Euler in the Bernoulli basis
    for n in ns:
        closed = euler_in_bernoulli(n)
        add("euler-in-bernoulli", {"n": n}, closed.recombine() - euler_poly(n))
        add("euler-in-bernoulli-routes", {"n": n}, _coeff_diff(closed.coeffs, expand_bernoulli_basis(euler_poly(n)).coeffs))
        add("euler-in-bernoulli-difference", {"n": n}, _coeff_diff(closed.coeffs, euler_in_bernoulli_difference(n)))

    # product rewrites
    for n in ns:
        for m in range(n + 1):
            for r in rs:
                report.extend(product_expansion_check(n, m, r, "bernoulli_order"))
            report.extend(product_expansion_check(n, m, family="euler"))

    report.extend(check_umbral_axioms(rng, random_instances))
    return report


def _unit(n: int) -> tuple:
    return tuple(Fraction(_delta(k, n)) for k in range(n + 1))


def _coeff_diff(a, b) -> Polynomial:
    """Coefficientwise difference packed as a polynomial (zero iff equal)."""
    size = max(len(a), len(b))
    a = tuple(a) + (Fraction(0),) * (size - len(a))
    b = tuple(b) + (Fraction(0),) * (size - len(b))
    return Polynomial(x - y for x, y in zip(a, b))


def _series_diff(f: PowerSeries, g: PowerSeries) -> Polynomial:
    return Polynomial((f - g).coeffs)
