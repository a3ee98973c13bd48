"""Command-line contract: exit codes, deterministic structured output,
and the --out file path."""

import json

from catbench.cli import main

DEMO = "workspaces/demo.yaml"


def test_validate_passes_on_demo(capsys):
    assert main(["validate", DEMO]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_certify_reports_monads(capsys):
    assert main(["certify", DEMO, "--probe-size", "2"]) == 0
    out = capsys.readouterr().out
    assert "maybe" in out


def test_missing_file_is_an_input_error(capsys):
    assert main(["validate", "no/such/file.yaml"]) == 2
    assert "input error" in capsys.readouterr().err


def test_unknown_reference_is_an_input_error(capsys):
    assert main(["translate", "--theorem", "mmain", "--input", "nope", DEMO]) == 2
    assert "input error" in capsys.readouterr().err


def test_translate_carac_requires_groupoid(capsys):
    # e4 is a groupoid: succeeds
    assert main(["translate", "--theorem", "carac", "--input", "e4", DEMO]) == 0
    capsys.readouterr()
    # two is not: verdict failure, not an input error
    assert main(["translate", "--theorem", "carac", "--input", "two", DEMO]) == 1


def test_translate_tx_tcat(capsys):
    assert main(["translate", "--theorem", "tx-tcat", "--input", "incl",
                 DEMO, "--probe-size", "2"]) == 0


def test_enumerate_groupoids(capsys):
    assert main(["enumerate", "--what", "groupoids", "--category", "e4",
                 DEMO]) == 0
    assert "1 groupoid" in capsys.readouterr().out


def test_structured_output_is_deterministic(capsys):
    assert main(["validate", DEMO, "--format", "structured"]) == 0
    first = capsys.readouterr().out
    json.loads(first)
    assert main(["validate", DEMO, "--format", "structured"]) == 0
    assert capsys.readouterr().out == first


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["validate", DEMO, "--format", "structured",
                 "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    json.loads(target.read_text())


def test_suite_runs_by_name(capsys):
    assert main(["suite", "--name", "carac"]) == 0
    assert "PASS" in capsys.readouterr().out
