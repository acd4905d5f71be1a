import json
import subprocess
import sys

from transcend.certificate import Certificate
from transcend.cli import main
from transcend.certify import classify_equation

SAMPLE_EQUATIONS = ["e^x + x - 12 = 0", "pi^x + 4*x = 49", "x*e^x = -x + 12", "e^x - x + 7 = 0"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_transcendental(capsys):
    code, out, _ = run(capsys, "classify", "e^x + x - 12 = 0")
    assert code == 0
    assert "status: transcendental" in out and "rule: T1" in out


def test_classify_lists_exception(capsys):
    code, out, _ = run(capsys, "classify", "sin(x) = x")
    assert code == 0 and "exceptions: 0" in out


def test_classify_unknown_exit_code(capsys):
    code, out, _ = run(capsys, "classify", "pi^x + 4*x = 49")
    assert code == 2 and "status: unknown" in out


def test_classify_number_prints_value(capsys):
    code, out, _ = run(capsys, "classify", "e + 4")
    assert code == 0 and "value: 6.71828182846" in out and "(P3)" in out


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "classify", "sin(x) = = x")
    assert code == 1 and "position 9" in err and "^" in err


def test_solve_real(capsys):
    code, out, _ = run(capsys, "solve", "--real", "--interval", "0", "5", "e^x + x - 12 = 0")
    assert code == 0 and "2.27472787148" in out and "status transcendental" in out


def test_solve_complex(capsys):
    code, out, _ = run(capsys, "solve", "--complex", "--rect", "-1", "4", "0", "5", "e^x - x + 7 = 0")
    assert code == 0 and "1.77016142016+2.66961359136i" in out


def test_solve_no_roots(capsys):
    code, out, _ = run(capsys, "solve", "--real", "--interval", "-20", "20", "e^x - x + 7 = 0")
    assert code == 3 and "no roots found" in out


def test_solve_marks_exceptional_root(capsys):
    code, out, _ = run(capsys, "--json", "solve", "--real", "--interval", "-1", "1", "sin(x) = x")
    doc = json.loads(out)
    assert code == 0
    assert [r["status"] for r in doc["roots"]] == ["algebraic"]


def test_solve_reports_bracket_failures_and_continues(capsys):
    code, out, _ = run(capsys, "--json", "solve", "--real", "--interval", "1", "5", "tan(x) = 1")
    doc = json.loads(out)
    assert code == 0 and doc["roots"] and doc["errors"]


def test_min_modulus_json(capsys):
    code, out, _ = run(capsys, "--json", "solve", "--min-modulus", "--radius", "10", "e^x - x + 7 = 0")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "1"
    (root,) = doc["roots"]
    assert root["value"] == {"re": 1.77016142016, "im": 2.66961359136}


def test_solve_requires_bounds(capsys):
    code, _, err = run(capsys, "solve", "--complex", "x = 1")
    assert code == 1 and "--rect" in err


def test_structured_certificate_round_trip(capsys):
    code, out, _ = run(capsys, "--json", "classify", "x*sin(x^2 - 1) = x^3")
    doc = json.loads(out)
    assert Certificate.from_dict(doc["certificate"]) == classify_equation("x*sin(x^2 - 1) = x^3")


def test_text_and_structured_agree(capsys):
    _, text, _ = run(capsys, "solve", "--real", "--interval", "0", "5", "e^x + x - 12 = 0")
    _, js, _ = run(capsys, "--json", "solve", "--real", "--interval", "0", "5", "e^x + x - 12 = 0")
    root = json.loads(js)["roots"][0]
    assert f"{root['value']['re']:.12g}" in text


def test_flags_after_the_command(capsys):
    code, out, _ = run(capsys, "classify", "--json", "e")
    assert code == 0 and json.loads(out)["certificate"]["rule"] == "axiom"


def test_batch(tmp_path, capsys):
    path = tmp_path / "equations.txt"
    path.write_text("# examples\n\n" + "\n".join(SAMPLE_EQUATIONS) + "\n")
    code, out, _ = run(capsys, "batch", str(path))
    assert code == 0
    assert out.strip().splitlines()[-1] == "summary: 3 transcendental / 1 unknown"
    assert [line.split(":")[0] for line in out.splitlines()[:4]] == ["line 3", "line 4", "line 5", "line 6"]


def test_batch_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("")
    code, out, _ = run(capsys, "batch", str(path))
    assert code == 0 and "0 transcendental" in out


def test_batch_malformed_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("sin(x) = x\nsin(x = \ne\n")
    code, out, _ = run(capsys, "--json", "batch", str(path))
    doc = json.loads(out)
    assert code == 1
    assert [("error" in r) for r in doc["reports"]] == [False, True, False]
    assert doc["summary"] == {"transcendental": 2, "algebraic": 0, "unknown": 0, "error": 1}


def test_algebra_commands(capsys):
    assert run(capsys, "algebra", "add", "2*tau + 1/2", "-2*tau + 1/2")[1].strip() == "1"
    assert run(capsys, "algebra", "mul", "tau + tau^-1", "tau - tau^-1")[1].strip() == "1*tau^2 - 1*tau^-2"
    grade = run(capsys, "algebra", "grade", "tau^3 - tau + tau^-1 - tau^-3")[1]
    assert grade.splitlines() == ["level 3: 1*tau^3 - 1*tau^-3", "level 1: -1*tau + 1*tau^-1"]
    cls = run(capsys, "algebra", "class", "tau^2", "tau")[1]
    assert "status: transcendental" in cls and "same class: false" in cls
    code, out, _ = run(capsys, "--tau-value", "2.718281828459045", "algebra", "dense", "3", "1e-3")
    assert code == 0 and out.splitlines()[0] == "1*tau + 141/500"


def test_algebra_dense_needs_tau_value(capsys):
    code, _, err = run(capsys, "algebra", "dense", "3", "1e-3")
    assert code == 1 and "--tau-value" in err


def test_precision_environment_variable(monkeypatch, capsys):
    monkeypatch.setenv("TRANSCEND_PRECISION", "1e-3")
    code, out, _ = run(capsys, "--json", "solve", "--real", "--interval", "2", "2.5", "e^x + x - 12 = 0")
    residual = json.loads(out)["roots"][0]["residual"]
    assert code == 0 and residual < 1e-3


def test_invalid_config(capsys):
    code, _, err = run(capsys, "--tol", "-1", "classify", "e")
    assert code == 1 and "positive" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "transcend", "classify", "sin(x) = x"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "T1" in proc.stdout
