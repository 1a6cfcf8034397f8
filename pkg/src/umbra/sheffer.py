"""Sheffer and Appell sequences, and expansions in a Sheffer basis."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .algebra import Polynomial, factorial
from .config import DEFAULT
from .errors import DomainError, OrderError, TruncationError
from .series import (
    PowerSeries,
    bernoulli_g,
    compositional_inverse,
    euler_g,
    operator_apply,
    pairing,
    series_compose,
    series_order,
    series_reciprocal,
    t_series,
)


@dataclass(frozen=True)
class ShefferPair:
    """``(g, f)`` with ``g`` invertible and ``f`` a delta series."""

    g: PowerSeries
    f: PowerSeries

    def __post_init__(self):
        if series_order(self.g) != 0:
            raise OrderError("g must be invertible (order 0)")
        if series_order(self.f) != 1:
            raise OrderError("f must be a delta series (order 1)")

    @property
    def trunc(self) -> int:
        return min(self.g.trunc, self.f.trunc)

    @property
    def is_appell(self) -> bool:
        return all(c == (1 if k == 1 else 0) for k, c in enumerate(self.f.coeffs))

    @classmethod
    def appell(cls, g: PowerSeries) -> "ShefferPair":
        return cls(g, t_series(g.trunc))


def _check_n(n: int, trunc: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"index must be a nonnegative integer, got {n!r}")
    if n > trunc:
        raise TruncationError(f"truncation {trunc} is too short for degree {n}")


def appell_poly(g: PowerSeries, n: int) -> Polynomial:
    """``S_n(x) = (1/g(t)) x^n`` for the Appell sequence of ``g``."""
    _check_n(n, g.trunc)
    if series_order(g) != 0:
        raise OrderError("Appell sequences need an invertible g")
    return operator_apply(series_reciprocal(g.truncate(n)), Polynomial.monomial(n))


def sheffer_polys(pair: ShefferPair, n: int) -> list:
    """``[S_0, ..., S_n]`` for the pair, read off ``e^(x fbar(t)) / g(fbar(t))``.

    The generating function is a power series in ``t`` whose coefficients are
    polynomials in ``x``; its ``t^k`` coefficient is ``S_k(x) / k!``.
    """
    _check_n(n, pair.trunc)
    m = max(n, 1)
    g, f = pair.g.truncate(m), pair.f.truncate(m)
    fbar = compositional_inverse(f)
    weight = series_reciprocal(series_compose(g, fbar))
    # gen[k] collects the x^j coefficients of [t^k]; weight * fbar^j / j! feeds x^j
    gen = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    term = weight
    for j in range(n + 1):
        inv_jf = Fraction(1, factorial(j))
        for k in range(j, n + 1):
            gen[k][j] = term.coeffs[k] * inv_jf
        term = term * fbar
    return [Polynomial(c * factorial(k) for c in gen[k]) for k in range(n + 1)]


def sheffer_poly(pair: ShefferPair, n: int) -> Polynomial:
    return sheffer_polys(pair, n)[n]


def sheffer_orthogonality(pair: ShefferPair, n: int, k: int) -> Fraction:
    """``<g(t) f(t)^k | S_n(x)>``; equals ``n!`` when ``n == k`` and 0 otherwise."""
    _check_n(n, pair.trunc)
    m = max(n, 1)
    g, f = pair.g.truncate(m), pair.f.truncate(m)
    return pairing(g * f**k, sheffer_poly(pair, n))


@dataclass(frozen=True, eq=False)
class Basis:
    """A polynomial basis given by a Sheffer pair, optionally under a family name."""

    pair: ShefferPair
    name: str = "sheffer"
    r: Optional[int] = None
    _cache: list = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return self.pair == other.pair

    __hash__ = None

    def poly(self, k: int) -> Polynomial:
        with self._lock:
            if k >= len(self._cache):
                self._extend(k)
            return self._cache[k]

    def _extend(self, k: int) -> None:
        if self.pair.is_appell:
            _check_n(k, self.pair.trunc)
            inv = series_reciprocal(self.pair.g.truncate(max(k, 1)))
            for j in range(len(self._cache), k + 1):
                self._cache.append(operator_apply(inv, Polynomial.monomial(j)))
        else:
            self._cache[:] = sheffer_polys(self.pair, k)

    def label(self) -> str:
        return self.name if self.r is None else f"{self.name}:{self.r}"


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients ``b_0..b_n`` with ``p = sum b_k S_k``."""

    basis: Basis
    coeffs: tuple

    def recombine(self) -> Polynomial:
        out = Polynomial()
        for k, b in enumerate(self.coeffs):
            if b:
                out = out + self.basis.poly(k) * b
        return out


def _as_basis(basis) -> Basis:
    return basis if isinstance(basis, Basis) else Basis(basis)


def expand_in_sheffer(p: Polynomial, basis) -> BasisExpansion:
    """``b_k = <g(t) f(t)^k | p(x)> / k!`` for ``k <= deg p``."""
    basis = _as_basis(basis)
    if p.is_zero():
        return BasisExpansion(basis, ())
    n = p.degree
    _check_n(n, basis.pair.trunc)
    m = max(n, 1)
    g, f = basis.pair.g.truncate(m), basis.pair.f.truncate(m)
    coeffs, gfk = [], g
    for k in range(n + 1):
        coeffs.append(pairing(gfk, p) / factorial(k))
        gfk = gfk * f
    return BasisExpansion(basis, tuple(coeffs))


def expand_functional(h: PowerSeries, basis, upto: int) -> list:
    """``d_k = <h(t) | S_k(x)> / k!`` so that ``h = sum d_k g f^k`` through ``t^upto``."""
    basis = _as_basis(basis)
    _check_n(upto, min(h.trunc, basis.pair.trunc))
    return [pairing(h, basis.poly(k)) / factorial(k) for k in range(upto + 1)]


def recombine_functional(d: Sequence[Fraction], pair: ShefferPair) -> PowerSeries:
    """``sum d_k g(t) f(t)^k`` truncated at ``t^(len(d) - 1)``."""
    m = max(len(d) - 1, 1)
    g, f = pair.g.truncate(m), pair.f.truncate(m)
    out, gfk = g * 0, g
    for dk in d:
        out = out + gfk * dk
        gfk = gfk * f
    return out.truncate(len(d) - 1)


# named families


@lru_cache(maxsize=None)
def named_basis(name: str, r: Optional[int] = None, trunc: int = DEFAULT.trunc) -> Basis:
    """Resolve ``bernoulli``, ``bernoulli-order`` (needs ``r``) or ``euler`` to a basis."""
    t = t_series(trunc)
    if name == "bernoulli":
        return Basis(ShefferPair(bernoulli_g(trunc), t), "bernoulli")
    if name == "bernoulli-order":
        if r is None or r < 0:
            raise DomainError("bernoulli-order basis needs r >= 0")
        return Basis(ShefferPair(bernoulli_g(trunc) ** r, t), "bernoulli-order", r)
    if name == "euler":
        return Basis(ShefferPair(euler_g(trunc), t), "euler")
    raise DomainError(f"unknown basis {name!r}")
