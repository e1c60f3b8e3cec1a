"""JSON and markdown rendering of sweep reports."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ..errors import UnknownFormat
from ..exact_arith import format_rational
from .runner import ClaimResult, Report


def _value(v: Any) -> Any:
    if v is None:
        return None
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return format_rational(Fraction(v))
    return str(v)


def _param(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, tuple):
        return [_param(x) for x in v]
    return v


def result_to_dict(r: ClaimResult) -> dict[str, Any]:
    return {
        "claim": r.claim,
        "params": {k: _param(v) for k, v in sorted(r.params.items())},
        "branch": r.branch,
        "status": r.status.value,
        "lhs": _value(r.lhs),
        "rhs": _value(r.rhs),
        "reason": r.reason,
    }


def report_to_dict(report: Report) -> dict[str, Any]:
    summary = {}
    for cid, s in report.summary.items():
        first = None
        if s.first_refutation is not None:
            d = result_to_dict(s.first_refutation)
            first = {k: d[k] for k in ("params", "branch", "lhs", "rhs")}
        summary[cid] = {
            "verified": s.verified,
            "refuted": s.refuted,
            "skipped": s.skipped,
            "first_refutation": first,
        }
    return {
        "version": report.version,
        "grid": report.grid,
        "results": [result_to_dict(r) for r in report.results],
        "summary": summary,
    }


def _params_text(params: dict[str, Any]) -> str:
    parts = []
    for k, v in sorted(params.items()):
        v = _param(v)
        if isinstance(v, list):
            v = "(" + ",".join(str(x) for x in v) + ")"
        parts.append("%s=%s" % (k, v))
    return " ".join(parts)


def _cell(v: Any) -> str:
    return "" if v is None else str(v).replace("|", "\\|")


def render_markdown(report: Report) -> str:
    lines = ["# Verification report", "", "version: %s" % report.version, ""]
    lines += [
        "## Summary",
        "",
        "| claim | verified | refuted | skipped | first refutation |",
        "|---|---|---|---|---|",
    ]
    for cid, s in report.summary.items():
        first = ""
        if s.first_refutation is not None:
            r = s.first_refutation
            first = "%s: lhs=%s, rhs=%s" % (_params_text(r.params), _value(r.lhs), _value(r.rhs))
        lines.append("| %s | %d | %d | %d | %s |" % (cid, s.verified, s.refuted, s.skipped, _cell(first)))
    lines += [
        "",
        "## Results",
        "",
        "| claim | params | branch | status | lhs | rhs | reason |",
        "|---|---|---|---|---|---|---|",
    ]
    for r in report.results:
        lines.append(
            "| %s | %s | %s | %s | %s | %s | %s |"
            % (
                r.claim,
                _cell(_params_text(r.params)),
                _cell(r.branch),
                r.status.value,
                _cell(_value(r.lhs)),
                _cell(_value(r.rhs)),
                _cell(r.reason),
            )
        )
    return "\n".join(lines) + "\n"


def report_render(report: Report, format: str = "json") -> str:
    if format == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if format == "markdown":
        return render_markdown(report)
    raise UnknownFormat("unknown report format %r (use json or markdown)" % format)
