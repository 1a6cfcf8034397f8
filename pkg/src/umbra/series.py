"""Truncated formal power series in ``t`` over Q, viewed as functionals on Q[x].

A :class:`PowerSeries` stores ordinary coefficients ``c_k`` of
``f(t) = sum c_k t^k + O(t^(N+1))``. As a linear functional it acts by
``<f(t) | x^n> = n! c_n``, so the exponential-generating coefficient of
``t^k`` is ``a_k = k! c_k``.

Binary operations truncate to the shorter operand.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    Polynomial,
    Scalar,
    compositions,
    factorial,
    multinomial,
    poly_derivative,
)
from .config import DEFAULT
from .errors import CompositionError, DomainError, OrderError, TruncationError

#: Order of a series whose retained coefficients all vanish.
ZERO_ORDER = math.inf


class PowerSeries:
    """Immutable truncated power series; ``trunc`` is the highest retained power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], trunc: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if trunc is not None:
            if trunc < 0:
                raise DomainError("truncation must be nonnegative")
            cs = (cs + [Fraction(0)] * (trunc + 1 - len(cs)))[: trunc + 1]
        if not cs:
            raise DomainError("a power series keeps at least the t^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def monomial_t(cls, k: int, trunc: int) -> "PowerSeries":
        """``t^k`` (zero if ``k > trunc``)."""
        return cls([0] * k + [1], trunc)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def egf(self, k: int) -> Fraction:
        """The coefficient ``a_k = k! c_k``, which equals ``<f | x^k>``."""
        return factorial(k) * self.coeffs[k]

    def truncate(self, n: int) -> "PowerSeries":
        if n > self.trunc:
            raise TruncationError(f"cannot extend truncation {self.trunc} to {n}")
        return PowerSeries(self.coeffs[: n + 1])

    @property
    def order(self):
        return series_order(self)

    # ring structure

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = PowerSeries((other,), self.trunc)
        if not isinstance(other, PowerSeries):
            return None, None
        n = min(self.trunc, other.trunc)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return PowerSeries(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return PowerSeries(x - y for x, y in zip(a, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self.coeffs)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return PowerSeries(_convolve(a, b, len(a)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise DomainError("series exponent must be a nonnegative integer")
        result, base = one(self.trunc), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a == b

    __hash__ = None  # equality is only up to the common truncation

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.trunc >= 8 else ""
        return f"PowerSeries([{body}{more}], trunc={self.trunc})"

    def derivative(self) -> "PowerSeries":
        """d/dt, losing one order of truncation (``c_k <- (k+1) c_{k+1}``)."""
        if self.trunc == 0:
            return PowerSeries((0,))
        return PowerSeries((k + 1) * c for k, c in enumerate(self.coeffs[1:]))


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list:
    out = [Fraction(0)] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


# constructors


def one(trunc: int = DEFAULT.trunc) -> PowerSeries:
    return PowerSeries((1,), trunc)


def t_series(trunc: int = DEFAULT.trunc) -> PowerSeries:
    """The delta series ``t``."""
    return PowerSeries((0, 1), max(trunc, 1))


def from_egf(a: Iterable[Scalar]) -> PowerSeries:
    """Build ``sum a_k t^k / k!`` from exponential-generating coefficients."""
    return PowerSeries(Fraction(ak) / factorial(k) for k, ak in enumerate(a))


def series_exp_linear(y: Scalar, trunc: int = DEFAULT.trunc) -> PowerSeries:
    """``e^(y t)``: ``c_k = y^k / k!``."""
    y = Fraction(y)
    return PowerSeries(y**k / factorial(k) for k in range(trunc + 1))


def exp_minus_one(y: Scalar = 1, trunc: int = DEFAULT.trunc) -> PowerSeries:
    """``e^(y t) - 1``."""
    y = Fraction(y)
    return PowerSeries([0] + [y**k / factorial(k) for k in range(1, trunc + 1)])


def integral_series(y: Scalar = 1, trunc: int = DEFAULT.trunc) -> PowerSeries:
    """``(e^(y t) - 1) / t`` built coefficientwise: ``c_k = y^(k+1) / (k+1)!``."""
    y = Fraction(y)
    return PowerSeries(y ** (k + 1) / factorial(k + 1) for k in range(trunc + 1))


def bernoulli_g(trunc: int = DEFAULT.trunc) -> PowerSeries:
    """``(e^t - 1) / t``, the invertible series whose Appell sequence is B_n(x)."""
    return integral_series(1, trunc)


def euler_g(trunc: int = DEFAULT.trunc) -> PowerSeries:
    """``(e^t + 1) / 2``, whose Appell sequence is E_n(x)."""
    return PowerSeries(
        [1] + [Fraction(1, 2 * factorial(k)) for k in range(1, trunc + 1)]
    )


def log1p_series(trunc: int = DEFAULT.trunc) -> PowerSeries:
    """``log(1 + t) = t - t^2/2 + t^3/3 - ...``."""
    return PowerSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, trunc + 1)])


# umbral algebra


def series_order(f: PowerSeries):
    """Index of the first nonzero coefficient, or ``ZERO_ORDER``."""
    for k, c in enumerate(f.coeffs):
        if c:
            return k
    return ZERO_ORDER


def series_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f + g


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f * g


def series_reciprocal(f: PowerSeries) -> PowerSeries:
    """``1/f`` by the triangular recurrence; needs ``f(0) != 0``."""
    c = f.coeffs
    if not c[0]:
        raise OrderError("series with zero constant term has no reciprocal")
    inv0 = 1 / c[0]
    h = [inv0]
    for k in range(1, len(c)):
        s = sum((c[j] * h[k - j] for j in range(1, k + 1) if c[j]), Fraction(0))
        h.append(-inv0 * s)
    return PowerSeries(h)


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(t))`` by Horner accumulation; ``g`` must have zero constant term."""
    if g.coeffs[0]:
        raise CompositionError("cannot substitute a series with nonzero constant term")
    n = min(f.trunc, g.trunc)
    g = g.truncate(n)
    acc = PowerSeries((f.coeffs[n],), n)
    for k in range(n - 1, -1, -1):
        acc = acc * g + f.coeffs[k]
    return acc


def compositional_inverse(f: PowerSeries) -> PowerSeries:
    """The series ``h`` with ``f(h(t)) = h(f(t)) = t`` for a delta series ``f``.

    Solves ``h(f(t)) = t`` one coefficient at a time: ``f^j`` has order ``j``,
    so ``[t^k] sum_j h_j f^j`` involves ``h_1..h_k`` only, with ``h_k``
    multiplied by ``f_1^k``.
    """
    if series_order(f) != 1:
        raise OrderError("compositional inverse needs a delta series (order 1)")
    n = f.trunc
    f1 = f.coeffs[1]
    powers = [None, f]  # powers[j] = f^j
    for _ in range(2, n + 1):
        powers.append(powers[-1] * f)
    h = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        s = sum((h[j] * powers[j].coeffs[k] for j in range(1, k) if h[j]), Fraction(0))
        h[k] = ((1 if k == 1 else 0) - s) / f1**k
    return PowerSeries(h)


def _require_trunc(f: PowerSeries, p: Polynomial, what: str) -> None:
    if p.coeffs and f.trunc < p.degree:
        raise TruncationError(
            f"{what}: series truncated at t^{f.trunc} cannot act exactly on degree {p.degree}"
        )


def operator_apply(f: PowerSeries, p: Polynomial) -> Polynomial:
    """``f(t) p(x) = sum_k c_k p^(k)(x)``, with ``t`` acting as d/dx."""
    _require_trunc(f, p, "operator_apply")
    out = Polynomial()
    for k in range(len(p.coeffs)):
        if f.coeffs[k]:
            out = out + poly_derivative(p, k) * f.coeffs[k]
    return out


def pairing(f: PowerSeries, p: Polynomial) -> Fraction:
    """``<f(t) | p(x)> = sum_n p_n n! c_n``."""
    _require_trunc(f, p, "pairing")
    return sum(
        (pn * factorial(n) * f.coeffs[n] for n, pn in enumerate(p.coeffs) if pn),
        Fraction(0),
    )


def pairing_multinomial(fs: Sequence[PowerSeries], n: int) -> Fraction:
    """``sum (n; i_1..i_m) <f_1|x^i_1> ... <f_m|x^i_m>`` over compositions of n.

    Evaluated term by term, independently of the series product.
    """
    if not fs:
        return Fraction(1 if n == 0 else 0)
    for f in fs:
        if f.trunc < n:
            raise TruncationError(f"series truncated at t^{f.trunc} below n={n}")
    total = Fraction(0)
    for parts in compositions(n, len(fs)):
        term = Fraction(multinomial(n, parts))
        for f, i in zip(fs, parts):
            term *= pairing(f, Polynomial.monomial(i))
            if not term:
                break
        total += term
    return total
