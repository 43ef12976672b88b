"""The eight acceptance criteria; each prints one PASS/FAIL line."""

from __future__ import annotations

import random
import time

import pytest

from defpow.core import DEFAULT_BUDGET
from defpow.logic import evaluate
from defpow.rings import build
from defpow.suites import SuiteReport, run_suite

from brute import bformula, random_sentence


@pytest.fixture
def verdict_line(capsys):
    def emit(label: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}{': ' + detail if detail else ''}")
        assert ok, detail

    return emit


def timed(name: str, seed: int = 0) -> tuple[SuiteReport, float]:
    start = time.perf_counter()
    report = run_suite(name, DEFAULT_BUDGET, seed)
    return report, time.perf_counter() - start


def failures(report: SuiteReport) -> list[str]:
    return [c.id for c in report.cases if str(c.outcome) in ("failed", "unknown")]


def labels(report: SuiteReport, prefix: str, verdict: str) -> set[str]:
    return {c.id.split(prefix, 1)[1] for c in report.cases if prefix in c.id and str(c.verdict) == verdict}


def test_acc1_lpow_x(verdict_line):
    report, secs = timed("lpow-x")
    key = [report.case(i) for i in ("01-z-box", "02-parity2-box", "03-zxz-refuter")]
    ok = report.passed and secs < 60 and all(str(c.outcome) in ("confirmed", "refuted-as-expected") for c in key)
    verdict_line("acc1 lpow-x", ok, f"{report.summary} in {secs:.1f}s, bad={failures(report)}")


def test_acc2_bivalente(verdict_line):
    report, _ = timed("bivalente")
    verdict_line("acc2 bivalente", report.passed, f"{report.summary}, mismatches={failures(report)}")


def test_acc3_extract(verdict_line):
    report, _ = timed("extract")
    # the constant test element 2 is the same ring element as the integer 2
    exact = {e.removeprefix("const-") for e in labels(report, "z-x-exact-", "True")}
    generic = {e.removeprefix("const-") for e in labels(report, "z-x-generic-", "True")}
    expected = {str(k) for k in range(1, 7)}
    witnesses = str(report.case("21-sympy-witnesses").outcome) == "confirmed"
    ok = report.passed and exact == generic == expected and witnesses
    verdict_line("acc3 extract", ok, f"truth set {sorted(exact)}, witnesses re-verified={witnesses}")


def test_acc4_theta(verdict_line):
    report, _ = timed("theta")
    true_set = labels(report, "parity2-exact-", "True")
    false_set = labels(report, "parity2-exact-", "False")
    unknown = [c.id for c in report.cases if "parity2-" in c.id and str(c.verdict) == "Unknown"]
    ok = (report.passed and true_set == {"1", "2", "3"} and false_set == {"x", "x+1", "const-3-1"}
          and not unknown and str(report.case("13-witnesses").outcome) == "confirmed")
    verdict_line("acc4 theta", ok, f"true {sorted(true_set)}, refuted {sorted(false_set)}, unknown {unknown}")


def test_acc5_counterexamples(verdict_line):
    further, _ = timed("lpow-further")
    constant, _ = timed("constantfn")
    items = {
        "a": [further.case("117-quotient-two-members")],
        "b": [further.case(f"{i}-dual-{p}") for i, p in ((118, 2), (119, 3), (120, 5))],
        "c": [constant.case("01-boolean-bool3"), constant.case("02-trunc2")],
        "d": [constant.case("03-quot2t-integers")],
    }
    status = {k: all(str(c.outcome) == "confirmed" for c in cs) for k, cs in items.items()}
    verdict_line("acc5 counterexample ledger", all(status.values()), f"{status}")


def test_acc6_diagram(verdict_line):
    report, _ = timed("diagram")
    arrows = {c.id.split("-")[2] for c in report.cases if "-arrow-" in c.id}
    counters = [c for c in report.cases if "-counter-" in c.id]
    ok = report.passed and len(arrows) == 11 and {c.id.rsplit("-", 1)[-1] for c in counters} >= {
        "zmod:4", "prod(z,z)", "prod(z,zmod:4)"}
    verdict_line("acc6 diagram", ok, f"{report.summary}, unexpected={failures(report)}")


def test_acc7_qplane(verdict_line):
    report, secs = timed("qplane", seed=7)
    ok = report.passed and secs < 60 and len(report.cases) == 7
    verdict_line("acc7 qplane", ok, f"{report.summary} in {secs:.1f}s, bad={failures(report)}")


def test_acc8_fol_soundness(verdict_line):
    ring = build("zmod:4")
    rng = random.Random(2024)
    unknown = disagree = 0
    for _ in range(1000):
        phi = random_sentence(rng, depth=3, n=4)
        tv = evaluate(phi, ring)
        if not tv.known:
            unknown += 1
        elif tv.is_true != bformula(phi, {}, 4):
            disagree += 1
    verdict_line("acc8 fol-eval soundness", disagree == 0,
                 f"1000 sentences, {disagree} disagreements, unknown rate {unknown / 10:.1f}%")
