from __future__ import annotations

import json

import pytest

from defpow.cli import main


@pytest.mark.parametrize("argv", [
    ["eval", "-r", "poly:parity2", "-f", "exists y in list(x^2; complete) . x | y"],
    ["eval", "-r", "zmod:4", "-f", "psi", "--let", "f=1", "--let", "s=1"],
])
def test_eval_examples(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("True")


def test_eval_with_let_and_json(capsys):
    code = main(["eval", "-r", "z", "-f", "exists y in list(3; complete) . a = y", "--let", "a=3", "--json"])
    data = json.loads(capsys.readouterr().out)
    assert code == 0 and data["verdict"] == "True" and data["ring"] == "z"


def test_exit_codes(capsys):
    assert main(["eval", "-r", "zmod:4", "-f", "1 = 0"]) == 1
    assert main(["eval", "-r", "z", "-f", "exists y in list(2) . y = 3"]) == 2
    assert main(["eval", "-r", "nonsense:9", "-f", "1 = 1"]) == 3
    assert main(["eval", "-r", "z", "-f", "1 = "]) == 3
    assert main(["suite", "no-such-suite"]) == 3
    assert main(["eval", "-r", "zmod:4", "-f", "psi"]) == 3
    capsys.readouterr()


def test_listings(capsys):
    assert main(["rings"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 10
    for cmd in ("suites", "formulas", "cites"):
        assert main([cmd]) == 0
        assert capsys.readouterr().out.strip()


def test_suite_json_report_and_merge(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["suite", "redunits", "--json", "--no-timing", "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert json.loads(printed) == json.loads(out.read_text())
    assert main(["report", str(out), str(out)]) == 0
    table = capsys.readouterr().out
    assert table.startswith("| suite | case |") and "Totals:" in table


def test_seed_sources(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 5, "rings": {"four": "zmod:4"}, "budget": {"exp_cap": 6}}))
    runs = {}
    for label, argv, env in (("config", ["--config", str(cfg)], None), ("env", ["--config", str(cfg)], "5"),
                             ("flag", ["--config", str(cfg), "suite", "qplane", "--seed", "5"], None)):
        if env:
            monkeypatch.setenv("DEFPOW_SEED", env)
        if label != "flag":
            argv = argv + ["suite", "qplane"]
        assert main(argv + ["--json", "--no-timing"]) == 0
        runs[label] = capsys.readouterr().out
        monkeypatch.delenv("DEFPOW_SEED", raising=False)
    assert runs["config"] == runs["env"] == runs["flag"]
    assert main(["--config", str(cfg), "eval", "-r", "four", "-f", "psi", "--let", "f=1", "--let", "s=1"]) == 0
    capsys.readouterr()


def test_budget_flags(capsys):
    assert main(["eval", "-r", "poly:z", "-f", "1 = 1", "--coeff-box=-2..2", "--divisor-box", "deg=2"]) == 0
    with pytest.raises(SystemExit):
        main(["eval", "-r", "z", "-f", "1 = 1", "--divisor-box", "size=2"])
    capsys.readouterr()
