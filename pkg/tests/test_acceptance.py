"""The twelve reproducibility claims, one PASS/FAIL line each.

The lines are printed in the terminal summary of the pytest run.
"""

import pytest

from colortwist.acceptance import CLAIMS, format_line, run_claim

# wall-clock budgets in seconds for the two table-only claims
BUDGETS = {1: 1.0, 2: 10.0}


@pytest.mark.parametrize("claim", CLAIMS, ids=[f"{c.number:02d}-{c.tag.replace(' ', '-')}" for c in CLAIMS])
def test_claim(claim, acceptance_report):
    result, seconds = run_claim(claim)
    acceptance_report[claim.number] = format_line(claim, result)
    assert result.ok, result.detail
    if claim.number in BUDGETS:
        assert seconds < BUDGETS[claim.number]


def test_registry_is_complete_and_ordered():
    assert [c.number for c in CLAIMS] == list(range(1, 13))
    assert len({c.tag for c in CLAIMS}) == 12
