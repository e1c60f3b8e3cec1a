"""Exact Frobenius-Euler numbers, Bernstein polynomials and fermionic p-adic
integrals, with a harness that checks identities between them pointwise."""

__version__ = "0.1.0"

from .exact_arith import Poly, Rational, Series, binomial, format_poly, format_rational
from .frobenius_euler import FEContext, fe_eval, fe_number, fe_numbers_via_gf, fe_poly, fe_poly_via_gf

__all__ = [
    "FEContext",
    "Poly",
    "Rational",
    "Series",
    "binomial",
    "fe_eval",
    "fe_number",
    "fe_numbers_via_gf",
    "fe_poly",
    "fe_poly_via_gf",
    "format_poly",
    "format_rational",
]
