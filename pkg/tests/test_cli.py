import json

import pytest
from jsonschema import validate

from jetclosures.cli import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_GUARD,
    EXIT_VERIFY_FAILED,
    main,
)

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "input_digest": {"type": ["string", "null"]},
        "result": {"type": ["object", "null"]},
        "generators": {"type": ["array", "null"], "items": {"type": "string"}},
        "certificates_verified": {"type": ["boolean", "null"]},
        "stabilized_at": {"type": ["integer", "null"]},
        "level_results": {"type": ["array", "null"]},
        "timings": {"type": ["object", "null"]},
    },
    "required": [
        "command", "input_digest", "result", "generators",
        "certificates_verified", "stabilized_at", "level_results", "timings",
    ],
    "additionalProperties": False,
}


@pytest.fixture
def cusp(tmp_path):
    path = tmp_path / "cusp.problem"
    path.write_text(
        "field Q\nvars x, y\nideal x^2+y^3\n"
        "candidate xy3 = x*y^3\ncandidate x = x\n"
    )
    return str(path)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_closure_text_output(cusp, capsys):
    code, out, _ = run(["closure", cusp, "--level", "4"], capsys)
    assert code == EXIT_OK
    assert out == "x^3\nx^2*y^2\nx^2+y^3\n"


def test_member_true_and_false(cusp, capsys):
    code, out, _ = run(["member", cusp, "--level", "4", "--candidate", "xy3"], capsys)
    assert code == EXIT_OK
    assert out == "member: true\ncertificates-verified: true\n"
    code, out, _ = run(["member", cusp, "--level", "4", "--candidate", "x"], capsys)
    assert code == EXIT_OK  # a negative verdict is still a successful run
    assert out == "member: false\nfailed-coefficient: 1\n"


def test_poly_option(cusp, capsys):
    code, out, _ = run(["member", cusp, "--level", "2", "--poly", "y^3"], capsys)
    assert code == EXIT_OK
    assert out.startswith("member: ")


def test_byte_identical_reruns(cusp, capsys):
    argv = ["arc-approx", cusp, "--max-level", "2", "--format", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_json_schema_and_content(cusp, capsys):
    code, out, _ = run(["closure", cusp, "--level", "2", "--format", "json"], capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    validate(payload, REPORT_SCHEMA)
    assert payload["command"] == "closure"
    assert payload["generators"] == ["x^2", "x*y^2", "y^3"]
    assert len(payload["input_digest"]) == 64
    assert payload["timings"] is None


def test_json_arc_report(cusp, capsys):
    code, out, _ = run(
        ["arc-approx", cusp, "--max-level", "2", "--format", "json"], capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    validate(payload, REPORT_SCHEMA)
    assert payload["stabilized_at"] is None
    assert [entry["level"] for entry in payload["level_results"]] == [0, 1, 2]


def test_timings_are_opt_in(cusp, capsys):
    _, out, _ = run(["closure", cusp, "--level", "0", "--format", "json",
                     "--timings"], capsys)
    payload = json.loads(out)
    validate(payload, REPORT_SCHEMA)
    assert "total_seconds" in payload["timings"]


def test_jet_command_raw_and_reduced(tmp_path, capsys):
    path = tmp_path / "quadric.problem"
    path.write_text(
        "field Q\nvars x, y, z\nrelation x^2+y^2+z^2\nideal x\nideal y\n")
    code, out, _ = run(["jet", str(path), "--level", "2", "--local"], capsys)
    assert code == EXIT_OK
    assert out.splitlines() == ["x@1^2+y@1^2+z@1^2", "x@1", "x@2", "y@1", "y@2"]
    code, out, _ = run(["jet", str(path), "--level", "2", "--local", "--reduced"],
                       capsys)
    assert out.splitlines() == ["x@1", "x@2", "y@1", "y@2", "z@1^2"]


def test_jet_zero_ideal_prints_zero(tmp_path, capsys):
    path = tmp_path / "zero.problem"
    path.write_text("field Q\nvars x\nideal 0\n")
    code, out, _ = run(["jet", str(path), "--level", "3", "--local"], capsys)
    assert code == EXIT_OK
    assert out == "0\n"


def test_integral_closure_command(tmp_path, capsys):
    path = tmp_path / "cube.problem"
    path.write_text("field Q\nvars x, y\nideal x^3\nideal y^3\n")
    code, out, _ = run(["integral-closure", str(path)], capsys)
    assert code == EXIT_OK
    assert out == "x^3\nx^2*y\nx*y^2\ny^3\n"


def test_input_errors_exit_2(tmp_path, cusp, capsys):
    bad = tmp_path / "bad.problem"
    bad.write_text("vars x\nideal x\n")
    code, _, err = run(["closure", str(bad), "--level", "1"], capsys)
    assert code == EXIT_INPUT_ERROR and "field" in err
    code, _, err = run(["closure", str(tmp_path / "missing.problem"),
                        "--level", "1"], capsys)
    assert code == EXIT_INPUT_ERROR
    code, _, err = run(["member", cusp, "--level", "1"], capsys)
    assert code == EXIT_INPUT_ERROR and "--poly or --candidate" in err
    code, _, err = run(["member", cusp, "--level", "1", "--poly", "q+1"], capsys)
    assert code == EXIT_INPUT_ERROR
    nonzero = tmp_path / "nonzero.problem"
    nonzero.write_text("field Q\nvars x\nideal x+1\n")
    code, _, err = run(["closure", str(nonzero), "--level", "1"], capsys)
    assert code == EXIT_INPUT_ERROR and "origin" in err


def test_resource_guard_exit_3(cusp, capsys):
    code, _, err = run(["closure", cusp, "--level", "4", "--max-degree", "3"], capsys)
    assert code == EXIT_RESOURCE_GUARD
    assert "degree" in err


def test_prime_field_override_warns_on_stderr(cusp, capsys):
    code, out, err = run(["closure", cusp, "--level", "0", "--field", "Fp", "5"],
                         capsys)
    assert code == EXIT_OK
    assert "characteristic" in err
    assert out == "x\ny\n"


def test_verify_paper_all_pass(capsys):
    code, out, _ = run(["verify-paper"], capsys)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("0 failed, 0 skipped")


def test_verify_paper_skips_excluded_characteristic(capsys):
    code, out, _ = run(["verify-paper", "--field", "Fp", "2"], capsys)
    assert code == EXIT_OK
    assert "SKIP cusp-closure-level-4" in out


def test_verify_paper_detects_corruption(capsys, monkeypatch):
    import jetclosures.verify as verify

    rows = list(verify.ROWS)
    broken = verify.VerifyRow(
        rows[0].name, rows[0].fixture, rows[0].command, rows[0].options,
        "cusp_member_x.expected", rows[0].char_exclude)
    monkeypatch.setattr(verify, "ROWS", (broken,) + tuple(rows[1:]))
    code, out, _ = run(["verify-paper"], capsys)
    assert code == EXIT_VERIFY_FAILED
    assert "FAIL" in out
