"""Catalog of identities to check, each as a pair of exact evaluators.

Claims with a ``-fixed`` suffix are corrected variants: the reflection
H_n(w, 1-x) = (-1)^n H_n(1/w, x), obtained from the generating function by
t -> -t, inverts the parameter, and the integral of u^eta (1-eta)^n is
rebuilt from it. ``C7-chain`` isolates the coefficient of the last term of
C7 by comparing it against the C6 right-hand side it was derived from.

Throughout, ``v`` stands for the shifted parameter -1/u.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional

from .. import bernstein, frobenius_euler, padic_integral
from ..exact_arith import Poly, binomial, one_minus_x_pow
from .grid import Grid

Params = dict[str, Any]
Evaluator = Callable[[Params], Any]


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    params: tuple[str, ...]
    instances: Callable[[Grid], Iterable[Params]]
    lhs: Evaluator
    rhs: Evaluator
    domain: Callable[[Params], Optional[str]] = lambda p: None
    branch: Callable[[Params], Optional[str]] = lambda p: None
    padic: bool = False

    def sort_key(self, params: Params) -> tuple:
        return tuple(params[name] for name in self.params)


# -- shared helpers ---------------------------------------------------------


def _v(u: Fraction) -> Fraction:
    return -1 / u


def H(w: Fraction, n: int) -> Fraction:
    return frobenius_euler.context_for(w).number(n)


def Hx(w: Fraction, n: int, x: Fraction) -> Fraction:
    return frobenius_euler.fe_eval(frobenius_euler.context_for(w), n, x)


def integral(u: Fraction, poly: Poly) -> Fraction:
    return padic_integral.integral_exact_via_fe(padic_integral.IntegrandSpec(u, poly))


def _need_v(p: Params) -> Optional[str]:
    u = p["u"]
    if u == 0:
        return "u = 0: -1/u undefined"
    if u == -1:
        return "u = -1: -1/u = 1 is a pole of the Frobenius-Euler generating function"
    return None


def _need_v_and_minus_u(p: Params) -> Optional[str]:
    return _need_v(p)  # -u = 1 exactly when u = -1, already excluded


def _all(*checks: Callable[[Params], Optional[str]]) -> Callable[[Params], Optional[str]]:
    def run(p: Params) -> Optional[str]:
        for check in checks:
            reason = check(p)
            if reason:
                return reason
        return None

    return run


def _n_at_least(lo: int) -> Callable[[Params], Optional[str]]:
    return lambda p: None if p["n"] >= lo else "requires n >= %d" % lo


def _k_branch(p: Params) -> str:
    return "k=0" if p["k"] == 0 else "k>0"


# The printed closed-form right-hand sides share these building blocks.
def _printed_tail(u: Fraction, m: int) -> Fraction:
    # 2/(u+1) + 2/(u^2+u) + 2/(u^3+u) H_m(v), as printed
    return Fraction(2) / (u + 1) + Fraction(2) / (u * u + u) + Fraction(2) / (u**3 + u) * H(_v(u), m)


def _chain_tail(u: Fraction, m: int) -> Fraction:
    # 2/(u+1) + 2/(u^2+u) + 2/(u^3+u^2) H_m(v)
    return Fraction(2) / (u + 1) + Fraction(2) / (u * u + u) + Fraction(2) / (u**3 + u * u) * H(_v(u), m)


def _normalized_tail(u: Fraction, m: int) -> Fraction:
    # 1 + u^-1 + u^-2 H_m(v)
    return 1 + 1 / u + H(_v(u), m) / (u * u)


def _alternating_h_sum(u: Fraction, length: int, start: int) -> Fraction:
    # sum_{l=0}^{length} C(length, l) (-1)^l H_{start+l}(v)
    v = _v(u)
    return sum(
        (binomial(length, l) * (-1) ** l * H(v, start + l) for l in range(length + 1)),
        Fraction(0),
    )


def _signed_sum(width: int, total: int, term: Callable[[int], Fraction]) -> Fraction:
    # sum_{l=0}^{width} C(width, l) (-1)^(width+l) term(total - l)
    return sum(
        (binomial(width, l) * (-1) ** (width + l) * term(total - l) for l in range(width + 1)),
        Fraction(0),
    )


def _prod_binom(ns: tuple[int, ...], k: int) -> int:
    out = 1
    for n in ns:
        out *= binomial(n, k)
    return out


def _product_integrand(ns: tuple[int, ...], k: int) -> Poly:
    return bernstein.bernstein_product([(k, n) for n in ns])


# -- instance generators ----------------------------------------------------


def _gen_u_n(min_n: int = 0) -> Callable[[Grid], Iterable[Params]]:
    def gen(g: Grid):
        for u in g.u:
            for n in g.n:
                if n >= min_n:
                    yield {"n": n, "u": u}

    return gen


def _gen_u_n_x(g: Grid):
    for u in g.u:
        for n in g.n:
            for x in g.x:
                yield {"n": n, "u": u, "x": x}


def _gen_u_n_k(strict: bool):
    def gen(g: Grid):
        for u in g.u:
            for n in g.n:
                for k in range(n + 1):
                    if strict and not n > k:
                        continue
                    yield {"k": k, "n": n, "u": u}

    return gen


def _gen_pairs(g: Grid):
    for u in g.u:
        for n1, n2 in itertools.product(g.n, repeat=2):
            for k in range(min(n1, n2) + 1):
                if n1 + n2 > 2 * k:
                    yield {"k": k, "n1": n1, "n2": n2, "u": u}


def _gen_tuples(g: Grid):
    # products are symmetric in the degrees, so nondecreasing tuples suffice
    for u in g.u:
        for s in g.s:
            if s < 2:
                continue
            for ns in itertools.combinations_with_replacement(g.n, s):
                for k in range(min(ns) + 1):
                    if sum(ns) > s * k:
                        yield {"k": k, "ns": tuple(ns), "s": s, "u": u}


def _gen_c2(g: Grid):
    for p in g.padic_p:
        for M in g.padic_precision:
            for u in g.padic_u:
                for n in g.padic_n:
                    for x in g.padic_x:
                        yield {"M": M, "n": n, "p": p, "u": u, "x": x}


def _gen_shift(g: Grid):
    for p in g.padic_p:
        for N in g.shift_levels:
            for u in g.u:
                for n in g.n:
                    yield {"N": N, "n": n, "p": p, "u": u}


def _gen_bsym(g: Grid):
    for n in g.n:
        for k in range(n + 1):
            for x in g.x:
                yield {"k": k, "n": n, "x": x}


# -- domain checks ----------------------------------------------------------


def _bern_domain(strict: bool):
    def check(p: Params) -> Optional[str]:
        k, n = p["k"], p["n"]
        if k < 0 or k > n:
            return "requires 0 <= k <= n"
        if strict and not n > k:
            return "requires n > k"
        return None

    return check


def _pair_domain(p: Params) -> Optional[str]:
    k, n1, n2 = p["k"], p["n1"], p["n2"]
    if k < 0 or k > min(n1, n2):
        return "requires 0 <= k <= min(n1, n2)"
    if not n1 + n2 > 2 * k:
        return "requires n1 + n2 > 2k"
    return None


def _tuple_domain(p: Params) -> Optional[str]:
    k, ns, s = p["k"], tuple(p["ns"]), p["s"]
    if s < 2 or len(ns) != s:
        return "requires s >= 2 degrees n_1..n_s"
    if k < 0 or k > min(ns):
        return "requires 0 <= k <= min(n_i)"
    if not sum(ns) > s * k:
        return "requires sum(n_i) > s*k"
    return None


def _padic_domain(p: Params) -> Optional[str]:
    reason = _need_v(p)
    if reason:
        return reason
    prime, u = p["p"], p["u"]
    if not padic_integral.is_odd_prime(prime):
        return "p must be an odd prime"
    if padic_integral.padic_valuation(u, prime) != 0:
        return "u is not a %d-adic unit" % prime
    if u != 1 and padic_integral.padic_valuation(u - 1, prime) < 1:
        return "|u - 1|_%d >= 1" % prime
    if p["x"].denominator % prime == 0:
        return "x is not %d-integral" % prime
    if p["M"] < 1:
        return "precision M must be positive"
    return None


def _shift_domain(p: Params) -> Optional[str]:
    if p["u"] == 0:
        return "u = 0"
    if not padic_integral.is_odd_prime(p["p"]):
        return "p must be an odd prime"
    if p["N"] < 1:
        return "level N must be positive"
    return None


# -- evaluators -------------------------------------------------------------


def _c1_lhs(p):
    n, u = p["n"], p["u"]
    h = frobenius_euler.fe_numbers_via_gf(u, n)
    return sum((binomial(n, k) * h[k] for k in range(n + 1)), Fraction(0)) - u * h[n]


def _c1_rhs(p):
    return 1 - p["u"] if p["n"] == 0 else Fraction(0)


def _c2_lhs(p):
    poly = Poly([p["x"], 1]) ** p["n"]
    return padic_integral.fermionic_integral(
        padic_integral.IntegrandSpec(p["u"], poly), p["p"], p["M"]
    ).residue


def _c2_rhs(p):
    u = p["u"]
    exact = Fraction(2) / (u + 1) * Hx(_v(u), p["n"], p["x"])
    return padic_integral.padic_from_rational(exact, p["p"], p["M"]).residue


def _c3_lhs(p):
    return Hx(_v(p["u"]), p["n"], p["x"])


def _c3_rhs(p):
    return frobenius_euler.fe_poly_via_gf(_v(p["u"]), p["x"], p["n"])[p["n"]]


def _c4_lhs(p):
    return Hx(_v(p["u"]), p["n"], 1 - p["x"])


def _c4_rhs(p):
    return (-1) ** p["n"] * Hx(_v(p["u"]), p["n"], p["x"])


def _c4_fixed_rhs(p):
    return (-1) ** p["n"] * Hx(-p["u"], p["n"], p["x"])


def _c5_lhs(p):
    u = p["u"]
    return u * u * Hx(_v(u), p["n"], 2)


def _c5_rhs(p):
    u = p["u"]
    return u * u + u + H(_v(u), p["n"])


def _c6_lhs(p):
    return integral(p["u"], one_minus_x_pow(p["n"]))


def _c6_rhs(p):
    u = p["u"]
    return Fraction(2) / (u + 1) * Hx(_v(u), p["n"], 2)


def _c6_fixed_rhs(p):
    u = p["u"]
    return Fraction(2) / (u + 1) * Hx(-u, p["n"], 2)


def _c7_rhs(p):
    return _printed_tail(p["u"], p["n"])


def _c7_fixed_rhs(p):
    u = p["u"]
    return 2 + 2 * u * u / (u + 1) * H(-u, p["n"])


def _c7_chain_rhs(p):
    return _chain_tail(p["u"], p["n"])


def _c8a_lhs(p):
    return integral(p["u"], bernstein.bernstein_poly((p["k"], p["n"])))


def _c8a_rhs(p):
    u, k, n = p["u"], p["k"], p["n"]
    return Fraction(2) / (u + 1) * binomial(n, k) * _alternating_h_sum(u, n - k, k)


def _c8b_lhs(p):
    return _alternating_h_sum(p["u"], p["n"] - p["k"], p["k"])


def _c8b_rhs(p):
    u, k, n = p["u"], p["k"], p["n"]
    if k == 0:
        return _normalized_tail(u, n)
    return _signed_sum(k, n, lambda m: _normalized_tail(u, m))


def _pair_lhs(p):
    return integral(p["u"], _product_integrand((p["n1"], p["n2"]), p["k"]))


def _c9_rhs(p):
    u, k, n1, n2 = p["u"], p["k"], p["n1"], p["n2"]
    if k == 0:
        return _printed_tail(u, n1 + n2)
    return _prod_binom((n1, n2), k) * _signed_sum(2 * k, n1 + n2, lambda m: _printed_tail(u, m))


def _c10a_rhs(p):
    u, k, n1, n2 = p["u"], p["k"], p["n1"], p["n2"]
    return (
        Fraction(2) / (u + 1)
        * _prod_binom((n1, n2), k)
        * _alternating_h_sum(u, n1 + n2 - 2 * k, 2 * k)
    )


def _c10b_lhs(p):
    u, k, n1, n2 = p["u"], p["k"], p["n1"], p["n2"]
    return _alternating_h_sum(u, n1 + n2 - 2 * k, 2 * k)


def _c10b_rhs(p):
    u, k, n1, n2 = p["u"], p["k"], p["n1"], p["n2"]
    if k == 0:
        return _normalized_tail(u, n1 + n2)
    return _signed_sum(2 * k, n1 + n2, lambda m: _normalized_tail(u, m))


def _tuple_lhs(p):
    return integral(p["u"], _product_integrand(tuple(p["ns"]), p["k"]))


def _c11_rhs(p):
    u, k, ns, s = p["u"], p["k"], tuple(p["ns"]), p["s"]
    total = sum(ns)
    if k == 0:
        return _printed_tail(u, total)
    return _prod_binom(ns, k) * _signed_sum(s * k, total, lambda m: _printed_tail(u, m))


def _c12a_rhs(p):
    u, k, ns, s = p["u"], p["k"], tuple(p["ns"]), p["s"]
    return (
        Fraction(2) / (u + 1)
        * _prod_binom(ns, k)
        * _alternating_h_sum(u, sum(ns) - s * k, s * k)
    )


def _c12b_lhs(p):
    u, k, ns, s = p["u"], p["k"], tuple(p["ns"]), p["s"]
    return u * u * _alternating_h_sum(u, sum(ns) - s * k, s * k)


def _c12b_rhs(p):
    u, k, ns, s = p["u"], p["k"], tuple(p["ns"]), p["s"]
    v = _v(u)
    total = sum(ns)
    if k == 0:
        return u * u + u + H(v, total)
    return _signed_sum(s * k, total, lambda m: u * u + u + H(v, m))


def _shift_spec(p) -> "padic_integral.IntegrandSpec":
    return padic_integral.IntegrandSpec(p["u"], Poly.monomial(p["n"]))


def _shift_lhs(p):
    spec = _shift_spec(p)
    return padic_integral.fermionic_partial_sum(
        spec.shifted(), p["p"], p["N"]
    ) + padic_integral.fermionic_partial_sum(spec, p["p"], p["N"])


def _shift_rhs(p):
    spec = _shift_spec(p)
    return spec(0) + spec(p["p"] ** p["N"])


def _bsym_lhs(p):
    k, n, x = p["k"], p["n"], p["x"]
    return binomial(n, k) * x**k * (1 - x) ** (n - k)


def _bsym_rhs(p):
    return bernstein.bernstein_eval((p["n"] - p["k"], p["n"]), 1 - p["x"])


# -- catalog ----------------------------------------------------------------

_UN = ("n", "u")
_UNX = ("n", "u", "x")
_UNK = ("k", "n", "u")
_PAIR = ("k", "n1", "n2", "u")
_TUPLE = ("k", "ns", "s", "u")

_CATALOG: tuple[Claim, ...] = (
    Claim(
        "C-BSYM",
        "Bernstein symmetry B_{k,n}(x) = B_{n-k,n}(1-x); lhs from the closed "
        "scalar formula, rhs from the expanded basis polynomial",
        ("k", "n", "x"),
        _gen_bsym,
        _bsym_lhs,
        _bsym_rhs,
        domain=_bern_domain(False),
    ),
    Claim(
        "C-SHIFT",
        "finite-level shift identity S_N(f_1) + S_N(f) = f(0) + f(p^N) for "
        "f(xi) = u^xi xi^n; the limit gives I(f_1) + I(f) = 2 f(0)",
        ("N", "n", "p", "u"),
        _gen_shift,
        _shift_lhs,
        _shift_rhs,
        domain=_shift_domain,
    ),
    Claim(
        "C1",
        "(H(u)+1)^n - u H_n(u) = 1-u if n=0 else 0, with H_k(u) taken from the "
        "generating-function route",
        _UN,
        _gen_u_n(),
        _c1_lhs,
        _c1_rhs,
        domain=lambda p: "u = 1 is excluded" if p["u"] == 1 else None,
    ),
    Claim(
        "C2",
        "int u^eta (x+eta)^n dmu_{-1} = 2/(u+1) H_n(v, x); numeric fermionic "
        "integral mod p^M against the reduced exact value (values are residues)",
        ("M", "n", "p", "u", "x"),
        _gen_c2,
        _c2_lhs,
        _c2_rhs,
        domain=_padic_domain,
        padic=True,
    ),
    Claim(
        "C3",
        "umbral expansion H_n(v, x) = sum C(n,k) x^(n-k) H_k(v) against the "
        "generating-function coefficient",
        _UNX,
        _gen_u_n_x,
        _c3_lhs,
        _c3_rhs,
        domain=_need_v,
    ),
    Claim(
        "C4",
        "reflection as printed: H_n(v, 1-x) = (-1)^n H_n(v, x)",
        _UNX,
        _gen_u_n_x,
        _c4_lhs,
        _c4_rhs,
        domain=_need_v,
    ),
    Claim(
        "C4-fixed",
        "parameter-inverted reflection: H_n(v, 1-x) = (-1)^n H_n(-u, x)",
        _UNX,
        _gen_u_n_x,
        _c4_lhs,
        _c4_fixed_rhs,
        domain=_need_v_and_minus_u,
    ),
    Claim(
        "C5",
        "u^2 H_n(v, 2) = u^2 + u + H_n(v) for n >= 1",
        _UN,
        _gen_u_n(1),
        _c5_lhs,
        _c5_rhs,
        domain=_all(_need_v, _n_at_least(1)),
    ),
    Claim(
        "C6",
        "int u^eta (1-eta)^n dmu_{-1} = 2/(u+1) H_n(v, 2), as printed",
        _UN,
        _gen_u_n(),
        _c6_lhs,
        _c6_rhs,
        domain=_need_v,
    ),
    Claim(
        "C6-fixed",
        "int u^eta (1-eta)^n dmu_{-1} = 2/(u+1) H_n(-u, 2)",
        _UN,
        _gen_u_n(),
        _c6_lhs,
        _c6_fixed_rhs,
        domain=_need_v_and_minus_u,
    ),
    Claim(
        "C7",
        "int u^eta (1-eta)^n dmu_{-1} = 2/(u+1) + 2/(u^2+u) + 2/(u^3+u) H_n(v) "
        "for n >= 1, as printed",
        _UN,
        _gen_u_n(1),
        _c6_lhs,
        _c7_rhs,
        domain=_all(_need_v, _n_at_least(1)),
    ),
    Claim(
        "C7-chain",
        "consistency of the printed derivation: 2/(u+1) H_n(v, 2) = 2/(u+1) + "
        "2/(u^2+u) + 2/(u^3+u^2) H_n(v) for n >= 1",
        _UN,
        _gen_u_n(1),
        _c6_rhs,
        _c7_chain_rhs,
        domain=_all(_need_v, _n_at_least(1)),
    ),
    Claim(
        "C7-fixed",
        "int u^eta (1-eta)^n dmu_{-1} = 2 + 2u^2/(u+1) H_n(-u) for n >= 1",
        _UN,
        _gen_u_n(1),
        _c6_lhs,
        _c7_fixed_rhs,
        domain=_all(_need_v_and_minus_u, _n_at_least(1)),
    ),
    Claim(
        "C8a",
        "int B_{k,n}(eta) u^eta dmu_{-1} = 2/(u+1) C(n,k) sum_l C(n-k,l) (-1)^l "
        "H_{l+k}(v)",
        _UNK,
        _gen_u_n_k(False),
        _c8a_lhs,
        _c8a_rhs,
        domain=_all(_need_v, _bern_domain(False)),
    ),
    Claim(
        "C8b",
        "sum_l C(n-k,l) (-1)^l H_{l+k}(v) against the two-branch display "
        "(k=0 / k>0) built from 1 + u^-1 + u^-2 H_m(v); n > k",
        _UNK,
        _gen_u_n_k(True),
        _c8b_lhs,
        _c8b_rhs,
        domain=_all(_need_v, _bern_domain(True)),
        branch=_k_branch,
    ),
    Claim(
        "C9",
        "int B_{k,n1} B_{k,n2} u^eta dmu_{-1} against the two-branch display "
        "with 2/(u^3+u); n1 + n2 > 2k",
        _PAIR,
        _gen_pairs,
        _pair_lhs,
        _c9_rhs,
        domain=_all(_need_v, _pair_domain),
        branch=_k_branch,
    ),
    Claim(
        "C10a",
        "int B_{k,n1} B_{k,n2} u^eta dmu_{-1} = 2/(u+1) C(n1,k) C(n2,k) sum_l "
        "C(n1+n2-2k,l) (-1)^l H_{2k+l}(v)",
        _PAIR,
        _gen_pairs,
        _pair_lhs,
        _c10a_rhs,
        domain=_all(_need_v, _pair_domain),
    ),
    Claim(
        "C10b",
        "sum_l C(n1+n2-2k,l) (-1)^l H_{2k+l}(v) against the two-branch display "
        "built from 1 + u^-1 + u^-2 H_m(v)",
        _PAIR,
        _gen_pairs,
        _c10b_lhs,
        _c10b_rhs,
        domain=_all(_need_v, _pair_domain),
        branch=_k_branch,
    ),
    Claim(
        "C11",
        "s-fold product int u^eta prod_i B_{k,n_i}(eta) dmu_{-1} against the "
        "two-branch display; the printed statement repeats the factor u^eta, "
        "evaluated here with a single factor as in its derivation",
        _TUPLE,
        _gen_tuples,
        _tuple_lhs,
        _c11_rhs,
        domain=_all(_need_v, _tuple_domain),
        branch=_k_branch,
    ),
    Claim(
        "C12a",
        "s-fold product integral = 2/(u+1) prod C(n_i,k) sum_l C(sum(n_d-k), l) "
        "(-1)^l H_{sk+l}(v)",
        _TUPLE,
        _gen_tuples,
        _tuple_lhs,
        _c12a_rhs,
        domain=_all(_need_v, _tuple_domain),
    ),
    Claim(
        "C12b",
        "u^2 sum_l C(sum(n_d-k), l) (-1)^l H_{sk+l}(v) against the two-branch "
        "display built from u^2 + u + H_m(v)",
        _TUPLE,
        _gen_tuples,
        _c12b_lhs,
        _c12b_rhs,
        domain=_all(_need_v, _tuple_domain),
        branch=_k_branch,
    ),
)

_BY_ID = {c.id: c for c in _CATALOG}


def claim_catalog() -> list[Claim]:
    return list(_CATALOG)


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise KeyError("unknown claim %r" % claim_id) from None
