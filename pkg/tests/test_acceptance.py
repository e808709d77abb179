"""One test per acceptance criterion, each printing a single PASS/FAIL line.

Thresholds live in :mod:`lct.suite` and are applied literally.  The
runtime budgets below are asserted alongside the numerical result.
"""

import pytest

from lct import suite

BUDGET = {
    "fourier": 5.0,
    "composition": 60.0,
    "reconstruction": 1.0,
    "unitarity": 30.0,
    "closed-form": 30.0,
    "bargmann": 60.0,
    "mellin": 300.0,
    "dual-forms": 10.0,
    "limits": 30.0,
    "structure": 5.0,
    "cont-elliptic": None,
}


@pytest.mark.parametrize("key", list(suite.CHECKS))
def test_criterion(key, record_property):
    result = suite.run_check(key)
    budget = BUDGET[key]
    in_time = budget is None or result.seconds < budget
    status = "PASS" if result.passed and in_time else "FAIL"
    limit = "" if budget is None else f" / {budget:.0f} s"
    line = f"[{status}] {result.name} ({result.seconds:.1f} s{limit})"
    record_property("criterion", line)
    print(f"\n{line} {suite._plain(result.details)}")
    assert result.passed, result.details
    assert in_time, f"{result.seconds:.1f} s exceeds {budget} s"
