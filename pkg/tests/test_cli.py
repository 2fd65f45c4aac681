"""Command-line behavior: outputs, exit codes, caps env, determinism."""

import json

import pytest

from sylowlab import cli
from sylowlab.config import ENV_CAPS
from sylowlab.counting import VerificationReport


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_cyclic(capsys):
    code, out, err = run_cli(capsys, "info", "cyclic:6")
    assert code == 0 and err == ""
    assert "order: 6" in out
    assert "cyclic: yes" in out
    assert "abelian: yes" in out


def test_info_sym4_and_q8(capsys):
    code, out, _ = run_cli(capsys, "info", "sym:4")
    assert code == 0 and "center order: 1" in out and "order: 24" in out
    code, out, _ = run_cli(capsys, "info", "q8")
    assert code == 0 and "center order: 2" in out


def test_info_elements_listing(capsys):
    code, out, _ = run_cli(capsys, "info", "sym:3", "--elements")
    assert code == 0
    assert "0: e" in out and "(1 2 3)" in out


def test_subgroups_lines(capsys):
    code, out, _ = run_cli(capsys, "subgroups", "sym:3")
    assert code == 0 and len(out.strip().splitlines()) == 6
    code, out, _ = run_cli(capsys, "subgroups", "sym:3", "--order", "2")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3
    assert all("normal=no" in line and "normalizer=2" in line for line in lines)
    code, out, _ = run_cli(capsys, "subgroups", "cyclic:1")
    assert code == 0 and len(out.strip().splitlines()) == 1
    code, out, _ = run_cli(capsys, "subgroups", "sym:3", "--normal")
    assert code == 0 and len(out.strip().splitlines()) == 3


def test_classes_output(capsys):
    code, out, _ = run_cli(capsys, "classes", "sym:3")
    assert code == 0
    assert "classes: 3" in out
    assert "size=3" in out


def test_sylow_output(capsys):
    code, out, _ = run_cli(capsys, "sylow", "sym:4", "--prime", "2")
    assert code == 0 and "chain orders: 2,4,8" in out
    code, out, _ = run_cli(capsys, "sylow", "sym:4", "--prime", "3")
    assert code == 0 and "chain orders: 3" in out
    code, out, _ = run_cli(capsys, "sylow", "cyclic:9", "--prime", "3")
    assert code == 0 and "chain orders: 3,9" in out
    code, _, err = run_cli(capsys, "sylow", "sym:4", "--prime", "5")
    assert code == 2 and err != ""
    code, _, err = run_cli(capsys, "sylow", "sym:4", "--prime", "4")
    assert code == 2 and "prime" in err


def test_decompose_output_and_errors(capsys):
    code, out, _ = run_cli(capsys, "decompose", "cyclic:6", "--element", "1", "--a", "2", "--b", "3")
    assert code == 0
    assert "alpha=3 beta=4" in out
    assert "a_part=3" in out and "b_part=4" in out
    code, out, _ = run_cli(capsys, "decompose", "cyclic:6", "--element", "0", "--a", "1", "--b", "1")
    assert code == 0 and "a_part=0" in out
    code, _, err = run_cli(capsys, "decompose", "cyclic:6", "--element", "1", "--a", "2", "--b", "2")
    assert code == 2 and "coprime" in err


def test_verify_single_group_passes(capsys):
    code, out, err = run_cli(capsys, "verify", "sym:4")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert lines and all(line.startswith(("PASS", "SKIP")) for line in lines)


def test_verify_parse_error_exits_2(capsys):
    code, out, err = run_cli(capsys, "verify", "nosuch:1")
    assert code == 2 and out == "" and "parse error" in err


def test_verify_usage_errors(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2 and err != ""
    code, _, err = run_cli(capsys, "verify", "sym:3", "--catalog", "8")
    assert code == 2 and err != ""


def test_verify_json_lines_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "cyclic:6", "--json")
    assert code == 0
    for line in out.strip().splitlines():
        payload = json.loads(line)
        assert list(payload) == ["theorem_id", "group", "params", "counted", "relation", "passed", "witnesses"]
        assert payload["group"] == "cyclic:6"


def test_verify_theorem_filter(capsys):
    code, out, _ = run_cli(capsys, "verify", "sym:3", "--theorems", "S4.I", "--json")
    assert code == 0
    ids = {json.loads(line)["theorem_id"] for line in out.strip().splitlines()}
    assert ids == {"S4.I"}
    code, out, _ = run_cli(capsys, "verify", "sym:3", "--theorems", "S5", "--json")
    ids = {json.loads(line)["theorem_id"] for line in out.strip().splitlines()}
    assert ids and all(i.startswith("S5.") for i in ids)


def test_verify_catalog_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "--catalog", "12", "--json")
    code2, out2, _ = run_cli(capsys, "verify", "--catalog", "12", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_failure_exit_code(monkeypatch, capsys):
    bogus = VerificationReport(
        theorem_id="S4.I", group="cyclic:2", params={}, counted=0,
        relation="forced failure", passed=False,
    )
    monkeypatch.setattr(cli, "theorem_suite", lambda group, caps: [bogus])
    code, out, _ = run_cli(capsys, "verify", "cyclic:2")
    assert code == 1 and out.startswith("FAIL")


def test_caps_env_override(monkeypatch, capsys):
    monkeypatch.setenv(ENV_CAPS, "16,8,8")
    code, _, err = run_cli(capsys, "info", "sym:4")
    assert code == 2 and "cap" in err
    code, _, err = run_cli(capsys, "subgroups", "sym:4")
    assert code == 2 and "cap" in err
    monkeypatch.setenv(ENV_CAPS, ",128,")
    code, out, _ = run_cli(capsys, "subgroups", "sym:4")
    assert code == 0


def test_caps_env_malformed(monkeypatch, capsys):
    monkeypatch.setenv(ENV_CAPS, "not,numbers")
    code, _, err = run_cli(capsys, "info", "cyclic:2")
    assert code == 2 and ENV_CAPS in err


def test_usage_error_exit_code(capsys):
    assert cli.main(["bogus-command"]) == 2
    capsys.readouterr()
    assert cli.main([]) == 2
    capsys.readouterr()
    assert cli.main(["--help"]) == 0
    capsys.readouterr()
