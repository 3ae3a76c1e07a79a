from __future__ import annotations

import pytest

from sphmin.pair import catalog


@pytest.fixture(scope="session")
def slsp2():
    return catalog("slsp", 2)


@pytest.fixture(scope="session")
def slsp3():
    return catalog("slsp", 3)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "SUMMARY", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
