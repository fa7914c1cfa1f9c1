"""End-to-end command-line behavior: JSON reports, file round-trips,
exit codes, environment validation."""

import json

import pytest

from nihobent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_build_quadratic_frozen(capsys):
    code, doc = run(capsys, "build", "--family", "quadratic",
                    "--m", "2", "--a", "0x1")
    assert code == 0
    assert doc["verdicts"]["bent"] is True
    assert doc["verdicts"]["degree"] == 2
    assert doc["verdicts"]["niho"] is True
    assert doc["outputs"]["weight"] in (6, 10)
    assert doc["outputs"]["trace_form"] == [
        {"subfield": 2, "coeff": "0x1", "exponent": 5}]


def test_build_check_roundtrip(tmp_path, capsys):
    table = tmp_path / "f.tt"
    code, built = run(capsys, "build", "--family", "binomial3",
                      "--m", "3", "--b", "0x5", "--out", str(table))
    assert code == 0
    code, checked = run(capsys, "check", str(table))
    assert code == 0
    assert checked["outputs"]["n"] == 6
    assert checked["outputs"]["weight"] == built["outputs"]["weight"]
    # the file-based verdicts must reproduce the in-process ones exactly
    for key in ("bent", "degree", "niho"):
        assert checked["verdicts"][key] == built["verdicts"][key]


def test_check_zero_function(tmp_path, capsys):
    table = tmp_path / "zero.tt"
    table.write_text("n=2\n0000\n")
    code, doc = run(capsys, "check", str(table))
    assert code == 0
    assert doc["verdicts"]["bent"] is False
    assert doc["verdicts"]["degree"] == 0
    assert doc["outputs"]["spectrum_summary"]["max"] == 4


def test_output_is_deterministic(capsys):
    argv = ("correspond", "--family", "subiaco", "--m", "2", "--b", "0xA")
    code1 = main(list(argv))
    first = capsys.readouterr().out
    code2 = main(list(argv))
    second = capsys.readouterr().out
    assert code1 == code2 == 0 and first == second


def test_compact_json_flag(capsys):
    code = main(["build", "--family", "quadratic", "--m", "2",
                 "--a", "0x1", "--json"])
    out = capsys.readouterr().out
    assert code == 0 and out.count("\n") == 1
    json.loads(out)


def test_correspond_subiaco_frozen(capsys):
    code, doc = run(capsys, "correspond", "--family", "subiaco",
                    "--m", "3", "--b", "0x1")
    assert code == 0
    corr = doc["outputs"]["correspondence"]
    assert corr["verified"] is True and corr["s"] == "0x0"
    assert doc["verdicts"]["verified"] is True


def test_correspond_adelaide(capsys):
    code, doc = run(capsys, "correspond", "--family", "adelaide",
                    "--m", "2", "--beta", "0x8")
    assert code == 0
    assert doc["verdicts"]["verified"] is True


def test_correspond_with_u_selector(capsys):
    code, doc = run(capsys, "correspond", "--family", "subiaco",
                    "--m", "2", "--b", "0x5", "--u", "fifth:1")
    assert code == 0 and doc["verdicts"]["verified"] is True


def test_opoly_sources(tmp_path, capsys):
    code, doc = run(capsys, "opoly", "--source", "subiaco",
                    "--m", "5", "--case", "1", "--s", "0x11")
    assert code == 0 and doc["verdicts"]["is_opoly"] is True
    code, doc = run(capsys, "opoly", "--source", "adelaide",
                    "--m", "2", "--beta", "0x8")
    assert code == 0 and doc["verdicts"]["is_opoly"] is True
    code, doc = run(capsys, "opoly", "--source", "frobenius",
                    "--m", "6", "--exponent", "2")
    assert code == 0 and doc["verdicts"]["is_opoly"] is False
    path = tmp_path / "ident.json"
    path.write_text(json.dumps(["0x0", "0x1", "0x2", "0x3"]))
    code, doc = run(capsys, "opoly", "--source", "file",
                    "--file", str(path))
    assert code == 0
    assert doc["verdicts"]["is_opoly"] is False
    assert doc["verdicts"]["is_permutation"] is True


def test_exit_code_precondition(capsys):
    assert main(["build", "--family", "binomial3", "--m", "2",
                 "--b", "0x0"]) == 2
    assert main(["build", "--family", "binomial4", "--m", "2",
                 "--b", "0x1"]) == 2
    assert main(["check", "/nonexistent/file.tt"]) == 2
    assert main(["correspond", "--family", "subiaco", "--m", "2"]) == 2
    capsys.readouterr()


def test_threads_env_validation(monkeypatch, capsys):
    monkeypatch.setenv("NIHOBENT_THREADS", "8")
    assert main(["build", "--family", "quadratic", "--m", "2",
                 "--a", "0x1"]) == 0
    monkeypatch.setenv("NIHOBENT_THREADS", "0")
    assert main(["build", "--family", "quadratic", "--m", "2",
                 "--a", "0x1"]) == 2
    monkeypatch.setenv("NIHOBENT_THREADS", "lots")
    assert main(["build", "--family", "quadratic", "--m", "2",
                 "--a", "0x1"]) == 2
    capsys.readouterr()


def test_spectrum_out(tmp_path, capsys):
    table = tmp_path / "f.tt"
    spec = tmp_path / "spec.json"
    assert main(["build", "--family", "quadratic", "--m", "2",
                 "--a", "0x1", "--out", str(table)]) == 0
    assert main(["check", str(table), "--spectrum-out", str(spec)]) == 0
    values = json.loads(spec.read_text())
    assert sorted(set(values)) == [-4, 4]
    capsys.readouterr()
