from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from .. import __version__
from ..errors import FEPadicError, InvalidIndex, InvalidParameter, NonInvertibleDenominator
from .claims import Claim, Params
from .grid import DEFAULT_CAPS, Caps, Grid

log = logging.getLogger(__name__)

# Precondition failures inside an evaluator; anything else propagates.
_SKIPPABLE = (InvalidParameter, InvalidIndex, NonInvertibleDenominator, ZeroDivisionError)


class Status(str, enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    params: Params
    status: Status
    branch: Optional[str] = None
    lhs: Any = None
    rhs: Any = None
    reason: Optional[str] = None
    sort_key: tuple = field(default=(), compare=False, repr=False)


@dataclass
class ClaimSummary:
    verified: int = 0
    refuted: int = 0
    skipped: int = 0
    first_refutation: Optional[ClaimResult] = None


@dataclass
class Report:
    version: str
    grid: dict[str, Any]
    results: list[ClaimResult]
    summary: dict[str, ClaimSummary]

    def refuted(self) -> list[ClaimResult]:
        return [r for r in self.results if r.status is Status.REFUTED]

    def for_claim(self, claim_id: str) -> list[ClaimResult]:
        return [r for r in self.results if r.claim == claim_id]


def run_claim(claim: Claim, params: Params) -> ClaimResult:
    """Evaluate both sides of ``claim`` at one parameter point."""
    params = dict(params)
    if "ns" in params:
        params["ns"] = tuple(params["ns"])
    key = claim.sort_key(params)
    reason = claim.domain(params)
    if reason:
        return ClaimResult(claim.id, params, Status.SKIPPED, reason=reason, sort_key=key)
    branch = claim.branch(params)
    try:
        lhs = claim.lhs(params)
        rhs = claim.rhs(params)
    except _SKIPPABLE as exc:
        return ClaimResult(claim.id, params, Status.SKIPPED, branch=branch, reason=str(exc), sort_key=key)
    status = Status.VERIFIED if lhs == rhs else Status.REFUTED
    return ClaimResult(claim.id, params, status, branch=branch, lhs=lhs, rhs=rhs, sort_key=key)


def sweep(
    claims: Sequence[Claim],
    grid: Grid,
    caps: Caps = DEFAULT_CAPS,
    grid_label: Optional[dict[str, Any]] = None,
) -> Report:
    """Run every claim over its instances in ``grid``; output order is canonical."""
    grid.validate(caps)
    results: list[ClaimResult] = []
    for claim in claims:
        before = len(results)
        for params in claim.instances(grid):
            results.append(run_claim(claim, params))
        log.debug("%s: %d instances", claim.id, len(results) - before)
    return assemble_report(results, grid_label if grid_label is not None else grid.describe(), claims)


def assemble_report(
    results: Iterable[ClaimResult], grid_desc: dict[str, Any], claims: Sequence[Claim] = ()
) -> Report:
    ordered = sorted(results, key=lambda r: (r.claim, r.sort_key))
    summary: dict[str, ClaimSummary] = {c.id: ClaimSummary() for c in sorted(claims, key=lambda c: c.id)}
    for r in ordered:
        s = summary.setdefault(r.claim, ClaimSummary())
        if r.status is Status.VERIFIED:
            s.verified += 1
        elif r.status is Status.REFUTED:
            s.refuted += 1
            if s.first_refutation is None:
                s.first_refutation = r
        else:
            s.skipped += 1
    summary = dict(sorted(summary.items()))
    return Report(__version__, grid_desc, ordered, summary)
