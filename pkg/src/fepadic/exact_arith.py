"""Exact scalars, dense polynomials and truncated power series over Q.

Scalars are :class:`fractions.Fraction` throughout (aliased as ``Rational``);
a Fraction already keeps its sign in the numerator, a positive denominator
and lowest terms, with zero stored as ``0/1``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ZeroConstantTerm

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings must use the ``"p/q"`` (or bare ``"p"``) syntax used by reports;
    decimal or float spellings are rejected so nothing is ever rounded.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ValueError("not a rational literal: %r" % value)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ZeroDivisionError("zero denominator in %r" % value)
        return Fraction(num, den)
    raise TypeError("cannot interpret %r as an exact rational" % (value,))


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, omitting ``/1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are stripped
    on construction, so the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: RationalLike = 1) -> "Poly":
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Poly(%s)" % format_poly(self)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly.constant(1)
        base = self
        while e:
            if e & 1:
                result = poly_mul(result, base)
            e >>= 1
            if e:
                base = poly_mul(base, base)
        return result

    def scale(self, c: RationalLike) -> "Poly":
        c = as_rational(c)
        return Poly(c * a for a in self.coeffs)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return NotImplemented


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    """Horner evaluation of ``p`` at ``x``."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return Poly(out)


def poly_compose_affine(p: Poly, a: RationalLike, b: RationalLike) -> Poly:
    """Return q with q(x) == p(a + b*x)."""
    a = as_rational(a)
    b = as_rational(b)
    # Horner in the polynomial ring: q = (...(c_d * L + c_{d-1}) * L + ...)
    linear = Poly([a, b])
    acc = Poly()
    for c in reversed(p.coeffs):
        acc = poly_mul(acc, linear) + c
    return acc


def one_minus_x_pow(m: int) -> Poly:
    """(1 - x)**m expanded directly from binomial coefficients."""
    return Poly((-1) ** i * binomial(m, i) for i in range(m + 1))


def format_poly(p: Poly) -> str:
    """Human-readable form that the CLI parser reads back unchanged.

    Terms run from low to high degree, e.g. ``1/2 - x + 2*x^3``.
    """
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = "x" if i == 1 else "x^%d" % i
            body = mono if mag == 1 else "%s*%s" % (format_rational(mag), mono)
        if not parts:
            if c < 0:
                # the grammar only allows a sign on numeric literals
                body = "-" + body if (i == 0 or mag != 1) else "-1*" + body
            parts.append(body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class Series:
    """Power series in t truncated at ``order`` (coefficients 0..order kept)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[RationalLike], order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def exp(cls, order: int, scale: RationalLike = 1) -> "Series":
        """Truncation of exp(scale * t)."""
        scale = as_rational(scale)
        cs = []
        term = Fraction(1)
        for i in range(order + 1):
            cs.append(term)
            term = term * scale / (i + 1)
        return cls(cs, order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return "Series(%s, order=%d)" % ([format_rational(c) for c in self.coeffs], self.order)

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    def __sub__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order)

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        c = as_rational(other)
        return Series([c * a for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def egf_values(self) -> list[Fraction]:
        """Read the series as an exponential generating function: [n! a_n]."""
        out = []
        fact = 1
        for n, c in enumerate(self.coeffs):
            if n:
                fact *= n
            out.append(c * fact)
        return out


def series_mul(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        out.append(sum((a.coeffs[i] * b.coeffs[n - i] for i in range(n + 1)), Fraction(0)))
    return Series(out, order)


def series_inverse(a: Series) -> Series:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroConstantTerm("series has zero constant term; no inverse")
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.order + 1):
        s = sum((a.coeffs[i] * b[n - i] for i in range(1, n + 1)), Fraction(0))
        b.append(-inv0 * s)
    return Series(b, a.order)
