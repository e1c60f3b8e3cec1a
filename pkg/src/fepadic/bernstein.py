"""Bernstein basis polynomials B_{k,n}(x) = C(n,k) x^k (1-x)^(n-k)."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidIndex, LengthMismatch, MixedK
from .exact_arith import Poly, RationalLike, as_rational, binomial, one_minus_x_pow, poly_eval


class BernsteinIndex(NamedTuple):
    k: int
    n: int

    def check(self) -> "BernsteinIndex":
        if self.k < 0 or self.n < 0 or self.k > self.n:
            raise InvalidIndex("need 0 <= k <= n, got k=%d n=%d" % (self.k, self.n))
        return self


def _closed_form(coeff: int, k: int, m: int) -> Poly:
    # coeff * x^k * (1 - x)^m
    tail = one_minus_x_pow(m)
    return Poly([0] * k + [coeff * c for c in tail])


def bernstein_poly(idx: tuple[int, int]) -> Poly:
    k, n = BernsteinIndex(*idx).check()
    return _closed_form(binomial(n, k), k, n - k)


def bernstein_eval(idx: tuple[int, int], x: RationalLike) -> Fraction:
    return poly_eval(bernstein_poly(idx), x)


def bernstein_operator(samples: Sequence[RationalLike], n: int, x: RationalLike) -> Fraction:
    """B_n(f, x) given samples[k] = f(k/n)."""
    if n < 1:
        raise InvalidIndex("Bernstein operator degree must be positive")
    if len(samples) != n + 1:
        raise LengthMismatch("expected %d samples, got %d" % (n + 1, len(samples)))
    x = as_rational(x)
    return sum(
        (as_rational(f) * bernstein_eval((k, n), x) for k, f in enumerate(samples)),
        Fraction(0),
    )


def bernstein_product(indices: Sequence[tuple[int, int]]) -> Poly:
    """prod_i B_{k,n_i}(x), expanded as (prod C(n_i,k)) x^(sk) (1-x)^(sum n_i - sk)."""
    if not indices:
        raise InvalidIndex("need at least one Bernstein index")
    idxs = [BernsteinIndex(*i).check() for i in indices]
    k = idxs[0].k
    if any(i.k != k for i in idxs):
        raise MixedK("all factors must share the same k")
    coeff = 1
    for i in idxs:
        coeff *= binomial(i.n, k)
    s = len(idxs)
    return _closed_form(coeff, s * k, sum(i.n for i in idxs) - s * k)
