"""Independent reference computations for the test-suite.

Nothing here imports fepadic: values come from sympy series expansion of the
generating functions, or from brute-force finite sums over Fractions.
"""

from fractions import Fraction
from functools import lru_cache

import sympy as sp

_t = sp.Symbol("t")


def _to_fraction(expr) -> Fraction:
    r = sp.Rational(expr)
    return Fraction(int(r.p), int(r.q))


@lru_cache(maxsize=None)
def egf_coefficients(expr_key: str, u: Fraction, x: Fraction, n_max: int) -> tuple:
    su, sx = sp.Rational(u.numerator, u.denominator), sp.Rational(x.numerator, x.denominator)
    if expr_key == "fe":
        g = (1 - su) / (sp.exp(_t) - su) * sp.exp(sx * _t)
    elif expr_key == "fermionic":
        # int u^eta e^{eta t} dmu_{-1}(eta) = 2 / (u e^t + 1)
        g = 2 / (su * sp.exp(_t) + 1) * sp.exp(sx * _t)
    else:
        raise KeyError(expr_key)
    s = sp.series(g, _t, 0, n_max + 1).removeO()
    return tuple(_to_fraction(s.coeff(_t, n) * sp.factorial(n)) for n in range(n_max + 1))


def _order(n: int, floor: int) -> int:
    # one cached expansion per parameter set covers every smaller n
    return floor if n <= floor else n


def fe_number(u, n: int) -> Fraction:
    return egf_coefficients("fe", Fraction(u), Fraction(0), _order(n, 24))[n]


def fe_value(u, n: int, x) -> Fraction:
    return egf_coefficients("fe", Fraction(u), Fraction(x), _order(n, 10))[n]


def fermionic_moment(u, m: int) -> Fraction:
    """int u^eta eta^m dmu_{-1}(eta), from the moment generating function."""
    return egf_coefficients("fermionic", Fraction(u), Fraction(0), _order(m, 24))[m]


def integral_of_coeffs(u, coeffs) -> Fraction:
    return sum((Fraction(c) * fermionic_moment(u, m) for m, c in enumerate(coeffs) if c), Fraction(0))


def expand_binomial_power(a, b, m: int) -> list:
    """Coefficients of (a + b x)^m by direct multiplication."""
    out = [Fraction(1)]
    for _ in range(m):
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c * a
            nxt[i + 1] += c * b
        out = nxt
    return out


def mul_coeffs(p, q) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * b
    return out


def bernstein_coeffs(k: int, n: int) -> list:
    from math import comb

    mono = [Fraction(0)] * k + [Fraction(comb(n, k))]
    return mul_coeffs(mono, expand_binomial_power(1, -1, n - k))


def brute_alternating_sum(u, coeffs, terms: int) -> Fraction:
    u = Fraction(u)
    total = Fraction(0)
    for xi in range(terms):
        val = sum((Fraction(c) * xi**m for m, c in enumerate(coeffs)), Fraction(0))
        total += (-1) ** xi * u**xi * val
    return total


def mod_inverse_euclid(a: int, m: int) -> int:
    old_r, r, old_s, s = a, m, 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    assert old_r == 1
    return old_s % m


def modular_alternating_sum(u: int, coeffs, terms: int, modulus: int) -> int:
    """sum_{xi<terms} (-1)^xi u^xi poly(xi) mod modulus, for integral u and
    coefficients whose denominators are invertible mod modulus."""
    cs = [Fraction(c).numerator * pow(Fraction(c).denominator, -1, modulus) % modulus for c in coeffs]
    total = 0
    upow = 1
    for xi in range(terms):
        val = 0
        for c in reversed(cs):
            val = (val * xi + c) % modulus
        total = (total + (-1) ** (xi & 1) * upow * val) % modulus
        upow = upow * u % modulus
    return total
