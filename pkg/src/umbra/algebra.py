"""Exact rationals, dense polynomials over Q, and combinatorial coefficients.

Rationals are :class:`fractions.Fraction`, which already keeps the canonical
reduced form (positive denominator, gcd 1, zero as 0/1).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


def fmt_rational(q: Scalar) -> str:
    """Render ``q`` as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`fmt_rational`; also accepts a leading sign."""
    try:
        num, sep, den = text.strip().partition("/")
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


class Polynomial:
    """Immutable dense polynomial in ``x`` with ascending rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Polynomial":
        if n < 0:
            raise DomainError("monomial degree must be nonnegative")
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self):
        """Integer degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # ring structure

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise DomainError("polynomial exponent must be a nonnegative integer")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, a: Scalar) -> Fraction:
        return poly_eval(self, a)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def derivative(self, k: int = 1) -> "Polynomial":
        return poly_derivative(self, k)

    def antiderivative(self) -> "Polynomial":
        """The antiderivative with zero constant term."""
        return Polynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def shift(self, c: Scalar) -> "Polynomial":
        return poly_shift(self, c)


def _coerce(obj):
    if isinstance(obj, Polynomial):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Polynomial.constant(obj)
    return NotImplemented


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Descending-degree text form, e.g. ``x^4 - 2*x^3 + x^2 - 1/30``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = fmt_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{fmt_rational(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def poly_eval(p: Polynomial, a: Scalar) -> Fraction:
    """Horner evaluation of ``p`` at ``a``."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


def poly_derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-th derivative; ``k = 0`` is the identity."""
    if k < 0:
        raise DomainError("derivative order must be nonnegative")
    if k == 0:
        return p
    return Polynomial(
        falling_factorial(i, k) * c for i, c in enumerate(p.coeffs) if i >= k
    )


def poly_definite_integral(p: Polynomial, a: Scalar, b: Scalar) -> Fraction:
    anti = p.antiderivative()
    return poly_eval(anti, b) - poly_eval(anti, a)


def poly_shift(p: Polynomial, c: Scalar) -> Polynomial:
    """Return ``q`` with ``q(x) = p(x + c)`` by binomial expansion."""
    c = Fraction(c)
    if not c:
        return p
    n = len(p.coeffs)
    out = [Fraction(0)] * n
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        # (x + c)^i = sum_j C(i, j) c^(i-j) x^j
        cpow = Fraction(1)
        for j in range(i, -1, -1):
            out[j] += a * math.comb(i, j) * cpow
            cpow *= c
    return Polynomial(out)


# combinatorics


def _check_nonneg(*args: int) -> None:
    for a in args:
        if not isinstance(a, int) or a < 0:
            raise DomainError(f"expected a nonnegative integer, got {a!r}")


def factorial(n: int) -> int:
    _check_nonneg(n)
    return math.factorial(n)


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1)."""
    return math.perm(n, k)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when ``k > n``."""
    _check_nonneg(n, k)
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (i_1! ... i_m!) where the parts sum to n."""
    _check_nonneg(n, *parts)
    if sum(parts) != n:
        raise DomainError(f"multinomial parts {tuple(parts)} do not sum to {n}")
    out, remaining = 1, n
    for i in parts:
        out *= math.comb(remaining, i)
        remaining -= i
    return out


def combinatorial(kind: str, args: Sequence[int]) -> Fraction:
    """Dispatch ``factorial``/``binomial``/``multinomial`` with an exact result.

    ``multinomial`` takes ``(n, i_1, ..., i_m)``.
    """
    if kind == "factorial":
        (n,) = args
        return Fraction(factorial(n))
    if kind == "binomial":
        n, k = args
        return Fraction(binomial(n, k))
    if kind == "multinomial":
        n, *parts = args
        return Fraction(multinomial(n, parts))
    raise DomainError(f"unknown combinatorial kind {kind!r}")


def compositions(n: int, m: int):
    """All tuples of ``m`` nonnegative integers summing to ``n``."""
    if m == 0:
        if n == 0:
            yield ()
        return
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest
