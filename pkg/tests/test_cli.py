import io
import json

import pytest

from colortwist.cli import main


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    status = main(list(argv), out)
    return status, out.getvalue()


def test_symmetry_count():
    assert run("symmetries", "--model", "cc", "--count") == (0, "72\n")


def test_symmetry_listing_with_classes_and_dims():
    status, text = run("symmetries", "--model", "cc", "--classes", "--dims")
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "1 [A]"
    assert sum(1 for line in lines if line.startswith("class ")) == 9
    assert "RB    16  16  16  16   4   4" in lines


def test_fusion_table_is_square():
    status, text = run("anyons", "--model", "cc", "--table", "fusion")
    rows = text.splitlines()
    assert status == 0 and len(rows) == 17
    assert all(len(r.split()) == 17 for r in rows[1:])  # label plus 16 products


def test_spin_table_three_fermion():
    assert run("anyons", "--model", "3f", "--table", "spin") == (0, "1  +1\nf1 -1\nf2 -1\nf3 -1\n")


def test_model_verification_output():
    status, text = run("anyons", "--model", "tc", "--table", "monodromy", "--verify")
    assert status == 0
    assert "FAIL" not in text


def test_boundaries():
    status, text = run("boundaries", "--model", "cc", "--folds")
    assert status == 0
    assert "6 Lagrangian subgroups" in text
    assert "fold f1<->f2 -> blue" in text
    assert run("boundaries", "--model", "3f") == (0, "0 Lagrangian subgroups\n")


def test_build_then_params(tmp_path):
    path = tmp_path / "p2.json"
    status, _ = run("code", "build", "--family", "pauli-triangular", "--l", "2", "--out", str(path))
    assert status == 0
    assert json.loads(path.read_text())["n"] == 4
    status, text = run("code", "params", str(path), "--distance-max", "4", "--dressed")
    assert status == 0
    assert text.splitlines()[-1] == "[[4,1,2]] PASS"


def test_params_output_is_stable_across_round_trips(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    run("code", "build", "--family", "stellated-color", "--lattice", "488", "--s", "3", "--d", "3", "--out", str(first))
    report_a = run("code", "params", str(first))
    from colortwist.codes import dumps, loads

    second.write_text(dumps(*loads(first.read_text())))
    report_b = run("code", "params", str(second))
    assert report_a == report_b
    assert report_a[1].splitlines()[-1] == "[[15,2,3]] PASS"


def test_text_format_params(tmp_path):
    path = tmp_path / "t.txt"
    run("code", "build", "--family", "triangular", "--lattice", "666", "--d", "3", "--format", "text", "--out", str(path))
    status, text = run("code", "params", str(path))
    assert status == 0
    assert text.splitlines()[-1] == "[[7,1,3]] PASS"


def test_mismatched_family_metadata_fails(tmp_path):
    path = tmp_path / "bad.json"
    run("code", "build", "--family", "triangular", "--lattice", "666", "--d", "3", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["metadata"]["d"] = 5
    path.write_text(json.dumps(doc))
    status, text = run("code", "params", str(path))
    assert status == 1
    assert text.splitlines()[-1].endswith("FAIL")


@pytest.mark.parametrize(
    "argv",
    [
        ("bogus",),
        ("code", "build", "--family", "triangular", "--d", "3"),
        ("code", "build", "--family", "stellated-color", "--lattice", "666", "--s", "11", "--d", "3"),
        ("code", "params", "/nonexistent/code.json"),
        ("code", "params", "x.json", "--workers", "0"),
        ("verify-paper", "--only", "13"),
    ],
)
def test_usage_and_io_errors_exit_two(argv, capsys):
    status, text = run(*argv)
    assert status == 2 and text == ""
    err = capsys.readouterr().err
    assert err.startswith("colortwist: error:") and err.count("\n") == 1


def test_unwritable_output(tmp_path):
    status, _ = run("code", "build", "--family", "torus", "--L", "1", "--out", str(tmp_path / "missing" / "t.json"))
    assert status == 2


def test_output_is_deterministic():
    argv = ("code", "build", "--family", "stellated-surface", "--s", "5", "--d", "3")
    assert run(*argv) == run(*argv)


def test_verify_selected_claims():
    status, text = run("verify-paper", "--only", "2", "6")
    lines = text.splitlines()
    assert status == 0
    assert [line.split()[:2] for line in lines[:2]] == [["PASS", "2"], ["PASS", "6"]]
    assert lines[-1] == "2/2 claims pass"
