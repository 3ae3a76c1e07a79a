"""Acceptance criteria 1 to 8, each at its stated tolerance (exact) and time budget.

Every criterion prints one summary line, e.g.
``criterion 3: PASS [0.12s/10s] f_{w_2} = -1 on SL4, epsilon = -1 (checks=...)``.
The lines are also collected in ``SUMMARY`` and repeated in the pytest
terminal summary (see ``conftest.py``), so they appear without ``-s``.
"""
from __future__ import annotations

import pytest

from sphmin.selfcheck import CRITERIA, run_criterion, summary_line

SUMMARY: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    rep, in_budget = run_criterion(number)
    line = summary_line(number, rep, in_budget)
    SUMMARY[number] = line
    print(line)
    assert rep.ok, rep.witnesses[:3]
    assert in_budget, f"runtime {rep.runtime_ms} ms exceeds the budget"
    assert rep.trials > 0
