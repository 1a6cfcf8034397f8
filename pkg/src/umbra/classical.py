"""Bernoulli, Euler and higher-order Bernoulli numbers and polynomials.

Each family has a primary route through the umbral algebra and a second,
independent route (the Kronecker recurrences, the multinomial sum) kept as
an oracle for the tests and the verification driver.
"""
from __future__ import annotations

import threading
from fractions import Fraction

from .algebra import (
    Polynomial,
    Scalar,
    binomial,
    compositions,
    multinomial,
    poly_definite_integral,
    poly_eval,
    poly_shift,
)
from .config import DEFAULT
from .errors import DomainError
from .report import IdentityReport
from .series import (
    bernoulli_g,
    euler_g,
    exp_minus_one,
    integral_series,
    operator_apply,
    pairing,
    series_reciprocal,
)
from .sheffer import appell_poly

MAX_ORDER = DEFAULT.max_order


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"index must be a nonnegative integer, got {n!r}")


def _check_order(r: int) -> None:
    if not isinstance(r, int) or r < 0:
        raise DomainError(f"order r must be a nonnegative integer, got {r!r}")
    if r > MAX_ORDER:
        raise DomainError(f"order r={r} exceeds the configured cap {MAX_ORDER}")


class FamilyTable:
    """Memoized numbers and polynomials of one Appell family.

    Numbers come from the reciprocal of the family's invertible series, whose
    exponential-generating coefficients are the family's numbers.
    """

    def __init__(self, family: str, r: int | None = None):
        if family == "bernoulli":
            self._g = lambda n: bernoulli_g(n)
        elif family == "euler":
            self._g = lambda n: euler_g(n)
        elif family == "bernoulli_order":
            _check_order(r)
            self._g = lambda n: bernoulli_g(n) ** r
        else:
            raise DomainError(f"unknown family {family!r}")
        self.family, self.r = family, r
        self._numbers: list = []
        self._polys: dict = {}
        self._lock = threading.RLock()

    def number(self, n: int) -> Fraction:
        _check_index(n)
        with self._lock:
            if n >= len(self._numbers):
                trunc = max(n, 2 * len(self._numbers), 8)
                inv = series_reciprocal(self._g(trunc))
                self._numbers = [inv.egf(k) for k in range(trunc + 1)]
            return self._numbers[n]

    def numbers(self, upto: int) -> list:
        self.number(upto)
        return self._numbers[: upto + 1]

    def poly(self, n: int) -> Polynomial:
        _check_index(n)
        with self._lock:
            p = self._polys.get(n)
            if p is None:
                p = self._polys[n] = self._build(n)
            return p

    def _build(self, n: int) -> Polynomial:
        if self.family == "bernoulli_order":
            return appell_poly(self._g(n), n)
        # sum_l C(n, l) a_{n-l} x^l with a = the family's numbers
        nums = self.numbers(n)
        return Polynomial(binomial(n, l) * nums[n - l] for l in range(n + 1))


_tables: dict = {}
_tables_lock = threading.Lock()


def table(family: str, r: int | None = None) -> FamilyTable:
    key = (family, r)
    with _tables_lock:
        tab = _tables.get(key)
        if tab is None:
            tab = _tables[key] = FamilyTable(family, r)
        return tab


def bernoulli_number(n: int) -> Fraction:
    return table("bernoulli").number(n)


def bernoulli_poly(n: int) -> Polynomial:
    return table("bernoulli").poly(n)


def euler_number(n: int) -> Fraction:
    return table("euler").number(n)


def euler_poly(n: int) -> Polynomial:
    return table("euler").poly(n)


def bernoulli_poly_order(n: int, r: int) -> Polynomial:
    """B_n^{(r)}(x); ``r = 0`` gives ``x^n`` and ``r = 1`` gives B_n(x)."""
    _check_index(n)
    _check_order(r)
    if r == 0:
        return Polynomial.monomial(n)
    return table("bernoulli_order", r).poly(n)


def bernoulli_number_order(n: int, r: int) -> Fraction:
    _check_index(n)
    _check_order(r)
    if r == 0:
        return Fraction(1 if n == 0 else 0)
    return table("bernoulli_order", r).number(n)


# independent oracles


def bernoulli_numbers_recurrence(upto: int) -> list:
    """B_0..B_upto from ``(B+1)^n - B^n = delta_{1,n}``.

    For ``n >= 2`` this reads ``sum_{k<n} C(n, k) B_k = 0`` and determines
    ``B_{n-1}``.
    """
    out = [Fraction(1)]
    for m in range(1, upto + 1):
        s = sum((binomial(m + 1, k) * out[k] for k in range(m)), Fraction(0))
        out.append(-s / (m + 1))
    return out


def euler_numbers_recurrence(upto: int) -> list:
    """E_0..E_upto from ``E_n(1) + E_n = 2 delta_{0,n}``, i.e. ``2E_n = -sum_{k<n} C(n,k) E_k``."""
    out = [Fraction(1)]
    for n in range(1, upto + 1):
        s = sum((binomial(n, k) * out[k] for k in range(n)), Fraction(0))
        out.append(-s / 2)
    return out


def bernoulli_number_order_multinomial(n: int, r: int) -> Fraction:
    """Brute-force ``sum (n; l_1..l_r) B_{l_1} ... B_{l_r}`` over compositions of n."""
    _check_index(n)
    if r < 1:
        raise DomainError("the multinomial form needs r >= 1")
    b = bernoulli_numbers_recurrence(n)
    total = Fraction(0)
    for parts in compositions(n, r):
        term = Fraction(multinomial(n, parts))
        for l in parts:
            term *= b[l]
        total += term
    return total


def family_integral_identity_check(n: int, r: int, y: Scalar) -> IdentityReport:
    """Check the integral identities of B_n^{(r)} at the rational ``y``.

    Clauses:

    * ``integral``: the integral of B_n^{(r)} over [x, x+y], as a polynomial in
      x, equals (B_{n+1}^{(r)}(x+y) - B_{n+1}^{(r)}(x)) / (n+1);
    * ``operator``: the same polynomial is ((e^{yt}-1)/t) B_n^{(r)}(x);
    * ``pairing``: <(e^{yt}-1)/t | B_n^{(r)}> equals the integral over [0, y]
      and <e^{yt}-1 | B_{n+1}^{(r)}/(n+1)>;
    * ``unit`` (only when y = 1 and r >= 1): the integral over [0, 1] is
      B_n^{(r-1)}.
    """
    y = Fraction(y)
    params = {"n": n, "r": r, "y": y}
    report = IdentityReport()
    p = bernoulli_poly_order(n, r)
    q = bernoulli_poly_order(n + 1, r)
    anti = p.antiderivative()
    lhs = poly_shift(anti, y) - anti
    rhs = (poly_shift(q, y) - q) * Fraction(1, n + 1)
    report.add("family-integral", params, lhs - rhs)

    op = operator_apply(integral_series(y, n + 1), p)
    report.add("family-integral-operator", params, op - lhs)

    definite = poly_definite_integral(p, 0, y)
    report.add("family-integral-pairing", params, pairing(integral_series(y, n + 1), p) - definite)
    report.add(
        "family-integral-raising",
        params,
        pairing(exp_minus_one(y, n + 1), q) / (n + 1) - definite,
    )
    if y == 1 and r >= 1:
        report.add("family-integral-unit", params, definite - bernoulli_number_order(n, r - 1))
    return report


def kronecker_checks(n: int) -> tuple:
    """``(B_n(1) - B_n - delta_{1,n}, E_n(1) + E_n - 2 delta_{0,n})``; both vanish."""
    b = poly_eval(bernoulli_poly(n), 1) - bernoulli_number(n) - (1 if n == 1 else 0)
    e = poly_eval(euler_poly(n), 1) + euler_number(n) - (2 if n == 0 else 0)
    return b, e
