"""Registry of identities and the sweep machinery that checks them."""

from .claims import Claim, claim_catalog, get_claim
from .grid import DEFAULT_CAPS, DEFAULT_GRID, Caps, Grid
from .report import report_render, report_to_dict
from .runner import ClaimResult, Report, Status, run_claim, sweep

__all__ = [
    "Caps",
    "Claim",
    "ClaimResult",
    "DEFAULT_CAPS",
    "DEFAULT_GRID",
    "Grid",
    "Report",
    "Status",
    "claim_catalog",
    "get_claim",
    "report_render",
    "report_to_dict",
    "run_claim",
    "sweep",
]
