import json

import pytest

from bfredholm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_index_shift(capsys):
    code, out, _ = run(capsys, "index", "T(z)")
    assert code == 0
    assert out.strip().startswith("-1")


def test_index_json(capsys):
    code, out, _ = run(capsys, "index", "T((z - 1/2)^2 / (z - 3))", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body == {"index": -2, "route": "trace+winding"}


def test_analyze_json_schema(capsys):
    code, out, _ = run(capsys, "analyze", "T(z) (++) M[[0,1],[0,0]]", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["classification"] == "Fredholm"
    assert body["index_trace"] == body["index_winding"] == -1
    assert body["quotient_index"] == 2
    assert body["defects_in_ideal"] is True
    assert isinstance(body["pathway_notes"], list) and body["pathway_notes"]


def test_analyze_not_in_class_exit_2(capsys):
    code, out, _ = run(capsys, "analyze", "T(z - 1)")
    assert code == 2
    assert "NotInClass" in out


def test_parse_error_exit_1(capsys):
    code, _, err = run(capsys, "analyze", "T(z")
    assert code == 1
    assert "parse error" in err


def test_usage_error_exit_1(capsys):
    code, _, err = run(capsys, "analyze")
    assert code == 1


def test_unknown_suite_exit_1(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 1


def test_entries_shift_product(capsys):
    # T(z) T(z^-1) = I - e0 (x) e0, displayed exactly
    code, out, _ = run(capsys, "entries", "T(z) * T(z^-1)", "--rows", "3", "--cols", "3")
    assert code == 0
    assert out.splitlines()[:3] == ["0,0,0", "0,1,0", "0,0,1"]


def test_entries_block_out_of_range(capsys):
    code, _, err = run(capsys, "entries", "T(z)", "--block", "5")
    assert code == 2
    assert "precondition" in err


def test_entries_missing_split_exit_2(capsys):
    # coefficients of (z-1)/(z-2) are unavailable without a circle split
    code, _, err = run(capsys, "entries", "T((z - 1) / (z - 2))")
    assert code == 2


def test_scan_csv(capsys):
    code, out, _ = run(
        capsys, "scan", "T(z - 1/2)", "--radii", "1/8", "--directions", "4"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lambda,classification,index"
    assert len(lines) == 5
    assert all(line.endswith(",-1") for line in lines[1:])


def test_scan_empty_radii(capsys):
    code, out, _ = run(capsys, "scan", "T(z)", "--radii", "")
    assert code == 0
    assert out.strip() == "lambda,classification,index"


def test_scan_json_stable_radius(capsys):
    code, out, _ = run(
        capsys, "scan", "T((z - 1/2)^2 / (z - 3))",
        "--radii", "1/8,1/16", "--format", "json",
    )
    assert code == 0
    body = json.loads(out)
    assert body["base_index"] == -2
    assert body["stable_radius"] == "1/16"
    assert len(body["samples"]) == 16
    # no floating point anywhere in the scalars
    assert all("." not in s["lambda"] for s in body["samples"])


def test_verify_suite_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "loglaw")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith(("PASS", "FAIL")) for line in lines[:-1])
    assert lines[-1].endswith("cases passed")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fedosov", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["failed"] == 0
    assert body["passed"] == len(body["cases"]) > 0


def test_demo_nonstability(capsys):
    code, out, _ = run(capsys, "demo", "nonstability")
    assert code == 0
    assert "0,NotInClass," in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "index", "T(z)", "--format", "json", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["index"] == -1
