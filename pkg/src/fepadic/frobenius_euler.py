"""Frobenius-Euler numbers H_n(u) and polynomials H_n(u, x).

Two independent routes are provided:

* the recurrence ``(H(u) + 1)^n - u H_n(u) = 0`` for n >= 1 (umbral
  notation, H^k -> H_k), solved for H_n and memoized in an :class:`FEContext`;
* exact series division of the generating function
  ``(1 - u) / (e^t - u) * e^{xt}``.

They only share the primitives in :mod:`fepadic.exact_arith`. Callers that
need the shifted parameter ``-1/u`` build a separate context for it.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidParameter
from .exact_arith import (
    Poly,
    RationalLike,
    Series,
    as_rational,
    binomial,
    poly_eval,
    series_inverse,
)

DEFAULT_MAX_N = 512
GF_HEADROOM = 8


def _check_u(u: Fraction) -> None:
    if u == 1:
        raise InvalidParameter("Frobenius-Euler parameter u must differ from 1")


class FEContext:
    """Memoized Frobenius-Euler numbers for a fixed parameter ``u``.

    Thread-safe: the cache is only extended under a lock, and entries never
    change once written.
    """

    def __init__(self, u: RationalLike, max_n: int = DEFAULT_MAX_N):
        u = as_rational(u)
        _check_u(u)
        self.u = u
        self.max_n = max_n
        self._cache: list[Fraction] = [Fraction(1)]
        self._inv_u_minus_1 = 1 / (u - 1)
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return "FEContext(u=%s, cached=%d)" % (self.u, len(self._cache))

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise InvalidParameter("n must be non-negative")
        if n > self.max_n:
            raise InvalidParameter("n=%d exceeds the configured limit %d" % (n, self.max_n))
        cache = self._cache
        if n < len(cache):
            return cache[n]
        with self._lock:
            while len(cache) <= n:
                m = len(cache)
                s = sum((binomial(m, k) * cache[k] for k in range(m)), Fraction(0))
                cache.append(s * self._inv_u_minus_1)
        return cache[n]

    def numbers(self, n_max: int) -> list[Fraction]:
        self.number(n_max)
        return list(self._cache[: n_max + 1])

    def poly(self, n: int) -> Poly:
        """H_n(u, x) = sum_k C(n,k) H_k(u) x^(n-k)."""
        self.number(n)
        h = self._cache
        return Poly(binomial(n, j) * h[n - j] for j in range(n + 1))

    def eval(self, n: int, x: RationalLike) -> Fraction:
        return poly_eval(self.poly(n), x)


@lru_cache(maxsize=256)
def context_for(u: Fraction) -> FEContext:
    """Shared memoized context per parameter value (contexts are thread-safe)."""
    return FEContext(u)


def fe_number(ctx: FEContext, n: int) -> Fraction:
    return ctx.number(n)


def fe_poly(ctx: FEContext, n: int) -> Poly:
    return ctx.poly(n)


def fe_eval(ctx: FEContext, n: int, x: RationalLike) -> Fraction:
    return ctx.eval(n, x)


def _generating_series(u: Fraction, order: int) -> Series:
    # (1 - u) / (e^t - u)
    denom = Series.exp(order) - Series.constant(u, order)
    return series_inverse(denom) * (1 - u)


def fe_numbers_via_gf(u: RationalLike, N: int) -> list[Fraction]:
    """[H_0(u), ..., H_N(u)] read off the generating function."""
    u = as_rational(u)
    _check_u(u)
    if N < 0:
        raise InvalidParameter("N must be non-negative")
    order = N + GF_HEADROOM
    return _generating_series(u, order).egf_values()[: N + 1]


def fe_poly_via_gf(u: RationalLike, x: RationalLike, N: int) -> list[Fraction]:
    """[H_0(u,x), ..., H_N(u,x)] read off (1-u)/(e^t-u) * e^{xt}."""
    u = as_rational(u)
    x = as_rational(x)
    _check_u(u)
    if N < 0:
        raise InvalidParameter("N must be non-negative")
    order = N + GF_HEADROOM
    gf = _generating_series(u, order) * Series.exp(order, x)
    return gf.egf_values()[: N + 1]
