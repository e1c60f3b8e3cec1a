import json
from pathlib import Path

import pytest

from fepadic.harness import DEFAULT_GRID, claim_catalog, sweep

GOLDEN = Path(__file__).parent / "golden" / "default_statuses.json"


@pytest.fixture(scope="session")
def default_report():
    return sweep(claim_catalog(), DEFAULT_GRID)


@pytest.fixture(scope="session")
def golden_statuses():
    return json.loads(GOLDEN.read_text())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
