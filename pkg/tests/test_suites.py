from __future__ import annotations

import json

import pytest

from defpow.core import DEFAULT_BUDGET
from defpow.suites import CITES, SUITES, Outcome, run_suite, suite_cases

SLOW = {"lpow-x", "lpow-further", "equivalences", "diagram"}
FAST = [name for name in SUITES if name not in SLOW]


@pytest.mark.parametrize("name", FAST)
def test_fast_suite_passes(name):
    report = run_suite(name, DEFAULT_BUDGET, seed=0)
    assert report.passed, [c.id for c in report.cases if c.outcome is Outcome.FAILED]
    assert report.summary["unknown"] == 0


@pytest.mark.parametrize("name", list(SUITES))
def test_cases_cite_known_tags(name):
    cases = suite_cases(name, 0)
    assert cases
    assert all(c.cite in CITES for c in cases)
    assert len({c.id for c in cases}) == len(cases)


def test_report_schema():
    data = json.loads(run_suite("redunits", DEFAULT_BUDGET, 0).to_json(timing=True))
    assert {"suite", "cases", "summary"} <= set(data)
    for case in data["cases"]:
        assert {"id", "claim", "cite", "verdict", "evidence", "ms"} <= set(case)
        assert isinstance(case["ms"], (int, float))
    assert sum(data["summary"].values()) == len(data["cases"])


def test_reports_deterministic():
    a = run_suite("qplane", DEFAULT_BUDGET, 3).to_json(timing=False)
    b = run_suite("qplane", DEFAULT_BUDGET, 3, jobs=2).to_json(timing=False)
    assert a == b
    assert all(c["ms"] is None for c in json.loads(a)["cases"])


def test_unknown_suite():
    with pytest.raises(KeyError):
        suite_cases("nope", 0)
