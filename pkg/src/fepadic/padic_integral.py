"""Fermionic p-adic integrals of u^xi * poly(xi) over Z_p.

The integral is the limit of the alternating sums

    S_N(f) = sum_{xi=0}^{p^N - 1} (-1)^xi f(xi)

as N grows. Partial sums are computed exactly over Q and only then reduced
modulo p^M. The closed form

    int u^x x^m dmu_{-1}(x) = 2/(u+1) * H_m(-1/u)

gives an exact value to compare against (:func:`integral_exact_via_fe`).

The deformation parameter (sometimes written q) is always ``u`` here, and
``|u - 1|_p < 1`` is enforced for numeric integration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidParameter,
    LimitExceeded,
    NoConvergence,
    NonInvertibleDenominator,
)
from .exact_arith import Poly, RationalLike, as_rational, poly_compose_affine, poly_eval
from .frobenius_euler import context_for

DEFAULT_TERM_CAP = 10**6
INFINITY = math.inf


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _check_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise InvalidParameter("p must be an odd prime, got %r" % (p,))


def _int_valuation(m: int, p: int) -> int:
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def padic_valuation(q: RationalLike, p: int):
    """v_p(q) as an int, or ``math.inf`` for q == 0."""
    q = as_rational(q)
    if q == 0:
        return INFINITY
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def padic_abs(q: RationalLike, p: int) -> Fraction:
    """|q|_p = p^(-v_p(q))."""
    v = padic_valuation(q, p)
    if v == INFINITY:
        return Fraction(0)
    return Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v))


@dataclass(frozen=True)
class PadicInt:
    """An element of Z_p known modulo p**precision."""

    p: int
    precision: int
    residue: int

    def __post_init__(self):
        if self.precision < 1:
            raise InvalidParameter("precision must be positive")
        if not 0 <= self.residue < self.modulus:
            raise InvalidParameter("residue out of range for p^precision")

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def reduce(self, precision: int) -> "PadicInt":
        precision = min(precision, self.precision)
        return PadicInt(self.p, precision, self.residue % self.p**precision)

    def _coerce(self, other) -> "PadicInt":
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise InvalidParameter("cannot mix primes %d and %d" % (self.p, other.p))
            return other
        return padic_from_rational(as_rational(other), self.p, self.precision)

    def _binary(self, other, op) -> "PadicInt":
        other = self._coerce(other)
        prec = min(self.precision, other.precision)
        mod = self.p**prec
        return PadicInt(self.p, prec, op(self.residue, other.residue) % mod)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __radd__ = __add__
    __rmul__ = __mul__

    def __str__(self) -> str:
        return "%d mod %d^%d" % (self.residue, self.p, self.precision)


def _reduce_fraction(num: int, den: int, p: int, N: int) -> int:
    mod = p**N
    if den % p == 0:
        g = math.gcd(num, den)
        if (den // g) % p == 0:
            raise NonInvertibleDenominator("p=%d divides the denominator" % p)
        num, den = num // g, den // g
    return num * pow(den, -1, mod) % mod


def padic_from_rational(q: RationalLike, p: int, N: int) -> PadicInt:
    q = as_rational(q)
    _check_prime(p)
    if N < 1:
        raise InvalidParameter("precision must be positive")
    return PadicInt(p, N, _reduce_fraction(q.numerator, q.denominator, p, N))


@dataclass(frozen=True)
class IntegrandSpec:
    """The function f(xi) = u**xi * poly(xi)."""

    u: Fraction
    poly: Poly

    def __init__(self, u: RationalLike, poly: Poly):
        object.__setattr__(self, "u", as_rational(u))
        object.__setattr__(self, "poly", poly)
        if self.u == 0:
            raise InvalidParameter("u must be nonzero")

    def __call__(self, xi: RationalLike) -> Fraction:
        xi = as_rational(xi)
        if xi.denominator != 1:
            raise InvalidParameter("integrand is only evaluated at integers")
        return self.u ** xi.numerator * poly_eval(self.poly, xi)

    def shifted(self) -> "IntegrandSpec":
        """f_1(xi) = f(xi + 1) = u * u^xi * poly(xi + 1)."""
        return IntegrandSpec(self.u, poly_compose_affine(self.poly, 1, 1).scale(self.u))


class _AlternatingSum:
    """Incrementally extended S_L = sum_{xi<L} (-1)^xi u^xi poly(xi).

    With u = a/b and D * poly = P integral, the state is the integer
    A_L = sum_{xi<L} (-1)^xi a^xi b^(L-1-xi) P(xi), so that
    S_L = A_L / (b^(L-1) * D). No Fraction normalization per term.
    """

    def __init__(self, spec: IntegrandSpec):
        self.a = spec.u.numerator
        self.b = spec.u.denominator
        den = 1
        for c in spec.poly:
            den = den * c.denominator // math.gcd(den, c.denominator)
        self.D = den
        self.P = [int(c * den) for c in spec.poly]
        self.length = 0
        self.acc = 0
        self.apow = 1

    def _P(self, xi: int) -> int:
        acc = 0
        for c in reversed(self.P):
            acc = acc * xi + c
        return acc

    def extend(self, length: int) -> None:
        a, b = self.a, self.b
        acc, apow = self.acc, self.apow
        for xi in range(self.length, length):
            term = apow * self._P(xi)
            if b != 1 and xi:
                acc *= b
            acc = acc - term if xi & 1 else acc + term
            apow *= a
        self.acc, self.apow, self.length = acc, apow, max(length, self.length)

    def parts(self) -> tuple[int, int]:
        """(numerator, denominator) of the current partial sum, unreduced."""
        den = self.D * self.b ** max(self.length - 1, 0)
        return self.acc, den

    def value(self) -> Fraction:
        return Fraction(*self.parts())


def _terms(p: int, N: int, term_cap: int) -> int:
    if N < 1:
        raise InvalidParameter("level N must be positive")
    L = p**N
    if L > term_cap:
        raise LimitExceeded("p^N = %d terms exceeds the cap of %d" % (L, term_cap))
    return L


def fermionic_partial_sum(
    spec: IntegrandSpec, p: int, N: int, term_cap: int = DEFAULT_TERM_CAP
) -> Fraction:
    """Exact value of sum_{xi=0}^{p^N-1} (-1)^xi u^xi poly(xi)."""
    _check_prime(p)
    L = _terms(p, N, term_cap)
    s = _AlternatingSum(spec)
    s.extend(L)
    return s.value()


def shift_identity_residual(
    spec: IntegrandSpec, p: int, N: int, term_cap: int = DEFAULT_TERM_CAP
) -> Fraction:
    """S_N(f_1) + S_N(f) - f(0) - f(p^N); identically zero at every level."""
    _check_prime(p)
    L = _terms(p, N, term_cap)
    return (
        fermionic_partial_sum(spec.shifted(), p, N, term_cap)
        + fermionic_partial_sum(spec, p, N, term_cap)
        - spec(0)
        - spec(L)
    )


def check_numeric_integrand(spec: IntegrandSpec, p: int) -> None:
    """Raise unless u is a p-adic unit with |u - 1|_p < 1 and poly is p-integral."""
    _check_prime(p)
    u = spec.u
    if padic_valuation(u, p) != 0:
        raise InvalidParameter("u=%s is not a %d-adic unit" % (u, p))
    if u != 1 and padic_valuation(u - 1, p) < 1:
        raise InvalidParameter("need |u - 1|_%d < 1, i.e. u = 1 (mod %d); got u=%s" % (p, p, u))
    if any(c.denominator % p == 0 for c in spec.poly):
        raise InvalidParameter("polynomial coefficients must have denominators prime to %d" % p)


def fermionic_integral(
    spec: IntegrandSpec, p: int, M: int, term_cap: int = DEFAULT_TERM_CAP
) -> PadicInt:
    """The integral modulo p^M, by running S_N until it stabilizes.

    Stops once S_N, S_{N+1}, S_{N+2} agree modulo p^M.
    """
    check_numeric_integrand(spec, p)
    if M < 1:
        raise InvalidParameter("target precision must be positive")
    s = _AlternatingSum(spec)
    residues: list[int] = []
    N = 1
    while True:
        L = p**N
        if L > term_cap:
            raise NoConvergence(
                "no stabilization mod %d^%d within %d terms" % (p, M, term_cap)
            )
        s.extend(L)
        residues.append(_reduce_fraction(*s.parts(), p, M))
        if len(residues) >= 3 and residues[-1] == residues[-2] == residues[-3]:
            return PadicInt(p, M, residues[-1])
        N += 1


def integral_exact_via_fe(spec: IntegrandSpec) -> Fraction:
    """Closed form: 2/(u+1) * sum_m c_m H_m(-1/u) for poly = sum_m c_m x^m."""
    u = spec.u
    if u == 0 or u == -1:
        raise InvalidParameter("closed form needs u not in {0, -1}, got %s" % u)
    ctx = context_for(-1 / u)
    total = sum((c * ctx.number(m) for m, c in enumerate(spec.poly) if c), Fraction(0))
    return 2 * total / (u + 1)
