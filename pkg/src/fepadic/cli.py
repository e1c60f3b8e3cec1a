"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 computation error
(violated preconditions), 3 refuted results under ``--fail-on-refuted``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .bernstein import bernstein_eval, bernstein_poly
from .errors import DivideByZero, FEPadicError, GridError, PolySyntaxError, UnknownFormat
from .exact_arith import as_rational, format_poly, format_rational
from .frobenius_euler import FEContext, fe_numbers_via_gf
from .harness import Caps, Grid, claim_catalog, get_claim, report_render, run_claim, sweep
from .harness.grid import DEFAULT_CAPS, DEFAULT_GRID
from .harness.report import render_markdown, result_to_dict
from .harness.runner import Status, assemble_report
from .padic_integral import IntegrandSpec, fermionic_integral, integral_exact_via_fe
from .polyexpr import parse_poly

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_REFUTED = 0, 1, 2, 3

_NEG_RATIONAL = re.compile(r"-\d+/\d+\Z")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers: %r" % text) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fepadic", description=__doc__.splitlines()[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("fe-numbers", help="table of Frobenius-Euler numbers H_n(u)", allow_abbrev=False)
    p.add_argument("--u", type=_rational, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--cross-check", action="store_true", help="also compute via the generating function")

    p = sub.add_parser("fe-poly", help="coefficients of H_n(u, x)", allow_abbrev=False)
    p.add_argument("--u", type=_rational, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("bernstein", help="Bernstein basis polynomial B_{k,n}", allow_abbrev=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", type=_rational, dest="at")

    p = sub.add_parser("integrate", help="fermionic p-adic integral of u^x * poly(x)", allow_abbrev=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--u", type=_rational, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--precision", type=int, default=8)
    p.add_argument("--exact", action="store_true", help="closed form over Q instead of the residue")

    p = sub.add_parser("verify", help="check identities over a parameter grid", allow_abbrev=False)
    p.add_argument("--claims", default="all", help="comma-separated claim ids, or 'all'")
    p.add_argument("--grid", default="default", help="'default' or a JSON grid file")
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--fail-on-refuted", action="store_true")
    p.add_argument("--n-cap", type=int, default=DEFAULT_CAPS.max_n)
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    single = p.add_argument_group("single instance (replay a witness)")
    single.add_argument("--claim")
    for name in ("n", "k", "n1", "n2", "s", "p", "M", "N"):
        single.add_argument("--" + name, type=int)
    single.add_argument("--ns", type=_int_list)
    single.add_argument("--u", type=_rational)
    single.add_argument("--x", type=_rational)
    return parser


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # argparse mistakes "-1/2" for an option; glue it to the preceding flag
    out: list[str] = []
    for tok in argv:
        if _NEG_RATIONAL.match(tok) and out and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = out[-1] + "=" + tok
        else:
            out.append(tok)
    return out


def _cmd_fe_numbers(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    ctx = FEContext(args.u, max_n=max(args.max_n, 512))
    values = ctx.numbers(args.max_n)
    agree = None
    if args.cross_check:
        agree = fe_numbers_via_gf(args.u, args.max_n) == values
    if args.format == "csv":
        out.write("".join("%d,%s\n" % (n, format_rational(h)) for n, h in enumerate(values)))
    elif args.format == "json":
        doc = {"u": format_rational(args.u), "values": [format_rational(h) for h in values]}
        if agree is not None:
            doc["cross_check"] = agree
        out.write(json.dumps(doc) + "\n")
    else:
        u = format_rational(args.u)
        for n, h in enumerate(values):
            out.write("H_%d(%s) = %s\n" % (n, u, format_rational(h)))
        if agree is not None:
            out.write("generating-function cross-check: %s\n" % ("agrees" if agree else "MISMATCH"))
    if agree is False:
        print("error: recurrence and generating function disagree", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def _cmd_fe_poly(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    poly = FEContext(args.u, max_n=max(args.n, 512)).poly(args.n)
    if args.format == "csv":
        out.write("".join("%d,%s\n" % (i, format_rational(c)) for i, c in enumerate(poly)))
    elif args.format == "json":
        doc = {
            "u": format_rational(args.u),
            "n": args.n,
            "coefficients": [format_rational(c) for c in poly],
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(format_poly(poly) + "\n")
    return EXIT_OK


def _cmd_bernstein(args, out) -> int:
    if args.at is None:
        out.write(format_poly(bernstein_poly((args.k, args.n))) + "\n")
    else:
        out.write(format_rational(bernstein_eval((args.k, args.n), args.at)) + "\n")
    return EXIT_OK


def _cmd_integrate(args, out) -> int:
    spec = IntegrandSpec(args.u, parse_poly(args.poly))
    if args.exact:
        out.write(format_rational(integral_exact_via_fe(spec)) + "\n")
    else:
        r = fermionic_integral(spec, args.p, args.precision)
        out.write("%d mod %d^%d\n" % (r.residue, r.p, r.precision))
    return EXIT_OK


def _single_params(args) -> dict:
    claim = get_claim(args.claim)
    params = {}
    for name in claim.params:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError("claim %s needs --%s" % (claim.id, name))
        params[name] = value
    return params


def _cmd_verify(args, out) -> int:
    if args.list:
        for c in claim_catalog():
            out.write("%s\t%s\n" % (c.id, c.description))
        return EXIT_OK
    if args.claim:
        try:
            claim = get_claim(args.claim)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        result = run_claim(claim, _single_params(args))
        report = assemble_report([result], {"single": True}, [claim])
        _emit(report_render(report, args.format), args.report, out)
        return EXIT_REFUTED if args.fail_on_refuted and result.status is Status.REFUTED else EXIT_OK

    if args.claims == "all":
        claims = claim_catalog()
    else:
        try:
            claims = [get_claim(c.strip()) for c in args.claims.split(",") if c.strip()]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    grid = DEFAULT_GRID if args.grid == "default" else Grid.load(args.grid)
    caps = Caps(max_n=args.n_cap)
    report = sweep(claims, grid, caps)
    _emit(report_render(report, args.format), args.report, out)
    n_ref = len(report.refuted())
    print(
        "%d results: %d verified, %d refuted, %d skipped"
        % (
            len(report.results),
            sum(s.verified for s in report.summary.values()),
            n_ref,
            sum(s.skipped for s in report.summary.values()),
        ),
        file=sys.stderr,
    )
    return EXIT_REFUTED if args.fail_on_refuted and n_ref else EXIT_OK


def _emit(text: str, path: Optional[str], out) -> None:
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


_COMMANDS = {
    "fe-numbers": _cmd_fe_numbers,
    "fe-poly": _cmd_fe_poly,
    "bernstein": _cmd_bernstein,
    "integrate": _cmd_integrate,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
        return _COMMANDS[args.command](args, out)
    except (UsageError, PolySyntaxError, DivideByZero, GridError, UnknownFormat) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except FEPadicError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_COMPUTE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
