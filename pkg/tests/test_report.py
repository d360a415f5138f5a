import json

from hyperkit.report import AxiomResult, Report, scan


def test_scan_returns_least_witness():
    r = scan("even", range(10), lambda x: None if x == 0 else x % 2 == 0 or x < 3)
    assert not r.passed and r.witness == 3
    assert r.skipped == 1 and r.checked == 3


def test_report_verdicts_ignore_informational():
    rep = Report("t")
    rep.add(AxiomResult("a", True))
    rep.add(AxiomResult("b", False, (1, 2), informational=True))
    assert rep.passed and rep.failures() == []
    d = json.loads(rep.to_json())
    assert d["axioms"][1] == {"name": "b", "pass": False, "witness": [1, 2], "informational": True}
    assert "b" in rep and rep["a"].passed
    assert "FAIL" in rep.summary()
