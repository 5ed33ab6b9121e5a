"""The fifteen acceptance criteria, each under its time limit.

A pass/fail line per criterion is printed in the terminal summary.
"""

import pytest

from pbwdemazure.verify import CRITERIA, run_criterion

RESULTS = []


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    r = run_criterion(number, "quick")
    RESULTS.append(r)
    print("\n" + r.line())
    if not r.passed:
        print(f"    counterexamples: {r.counterexamples[:3]}")
        print(f"    replay: {r.replay}")
    assert r.passed, r.summary
    assert r.elapsed < r.limit, f"took {r.elapsed:.1f}s, limit {r.limit}s"
