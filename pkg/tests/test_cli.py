"""Command-line front end: exit codes, report documents, determinism."""

import json
import subprocess
import sys

import pytest

from ehlcp.cli import main


def write_doc(tmp_path, doc, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def worked_triple_doc():
    return {
        "n": 2,
        "k": 2,
        "C": [
            [[1, 0], [0, 1]],
            [[0, 1], [-1, 0]],
            [[1, 0], [0, 1]],
        ],
        "d": [[1, 1]],
        "q": [0, 0],
    }


def run_main(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_worked_triple_verdicts(self, tmp_path, capsys):
        path = write_doc(tmp_path, worked_triple_doc())
        code, out, _ = run_main(
            ["check", "--file", path, "--props", "csw,column_w"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["verdicts"]["csw"]["holds"] is True
        assert doc["verdicts"]["column_w"]["holds"] is False

    def test_identity_tuple_column_w(self, tmp_path, capsys):
        doc = {"n": 2, "k": 1, "C": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]], "q": [0, 0]}
        path = write_doc(tmp_path, doc)
        code, out, _ = run_main(["check", "--file", path, "--props", "column_w"], capsys)
        assert code == 0
        assert json.loads(out)["verdicts"]["column_w"]["holds"] is True

    def test_malformed_d_exits_2(self, tmp_path, capsys):
        doc = worked_triple_doc()
        doc["d"] = [[1, 0]]
        path = write_doc(tmp_path, doc)
        code, _, err = run_main(["check", "--file", path, "--props", "csw"], capsys)
        assert code == 2
        assert "d must be strictly positive" in err

    def test_unknown_property_exits_2(self, tmp_path, capsys):
        path = write_doc(tmp_path, worked_triple_doc())
        code, _, err = run_main(["check", "--file", path, "--props", "bogus"], capsys)
        assert code == 2

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_main(
            ["check", "--file", "/nonexistent.json", "--props", "csw"], capsys
        )
        assert code == 2

    def test_matrix_class_props_reported_per_matrix(self, tmp_path, capsys):
        path = write_doc(tmp_path, worked_triple_doc())
        code, out, _ = run_main(["check", "--file", path, "--props", "z"], capsys)
        doc = json.loads(out)["verdicts"]["z"]
        assert doc["C0"]["holds"] is True
        assert doc["C1"]["holds"] is False

    def test_recheck_agrees(self, tmp_path, capsys):
        path = write_doc(tmp_path, worked_triple_doc())
        code, out, _ = run_main(
            ["check", "--file", path, "--props", "csw", "--recheck"], capsys
        )
        assert code == 0
        assert json.loads(out)["recheck"] == "ok"

    def test_cap_exceeded_exits_3(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("EHLCP_MAX_PATTERN_COMPONENTS", "3")
        doc = worked_triple_doc()
        # degenerate C0 disables both fast paths, forcing enumeration
        doc["C"][0] = [[1, 0], [0, 0]]
        path = write_doc(tmp_path, doc)
        code, _, err = run_main(["check", "--file", path, "--props", "csw"], capsys)
        assert code == 3
        assert "undecided: size" in err


class TestSolve:
    def test_split_instance(self, tmp_path, capsys):
        doc = {"n": 2, "k": 1, "C": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]], "q": [1, -2]}
        path = write_doc(tmp_path, doc)
        code, out, _ = run_main(["solve", "--file", path], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["path"] == "enumeration"
        assert len(report["pieces"]) == 1
        assert report["pieces"][0]["point"] == [["1", "0"], ["0", "2"]]

    def test_segment_instance_reports_dimension_one(self, tmp_path, capsys):
        doc = {"n": 2, "k": 1, "C": [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]], "q": [0, 1]}
        path = write_doc(tmp_path, doc)
        code, out, _ = run_main(["solve", "--file", path], capsys)
        assert code == 0
        dims = [p["dimension"] for p in json.loads(out)["pieces"]]
        assert 1 in dims

    def test_fast_m_path(self, tmp_path, capsys):
        doc = {"n": 2, "k": 1, "C": [[[2, -1], [-1, 2]], [[0, 1], [-1, 0]]], "q": [1, 1]}
        path = write_doc(tmp_path, doc)
        code, out, _ = run_main(["solve", "--file", path, "--fast-m"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["path"] == "m_fast"
        assert report["pieces"][0]["point"] == [["1", "1"], ["0", "0"]]

    def test_out_file(self, tmp_path, capsys):
        doc = {"n": 1, "k": 1, "C": [[[1]], [[1]]], "q": [1]}
        path = write_doc(tmp_path, doc)
        out_path = tmp_path / "report.json"
        code, out, _ = run_main(
            ["solve", "--file", path, "--out", str(out_path)], capsys
        )
        assert code == 0 and out == ""
        report = json.loads(out_path.read_text())
        assert report["command"] == "solve"


class TestVerify:
    def test_pass_exits_0(self, tmp_path, capsys):
        code, out, _ = run_main(
            ["verify", "--theorem", "T4.3-chain", "--trials", "5", "--seed", "1"],
            capsys,
        )
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert "timing_seconds" not in report

    def test_unknown_theorem_exits_2(self, capsys):
        code, _, err = run_main(["verify", "--theorem", "T0.0", "--trials", "1"], capsys)
        assert code == 2

    def test_same_seed_byte_identical(self, tmp_path):
        args = [
            sys.executable, "-m", "ehlcp", "verify",
            "--theorem", "T4.1-ndw", "--trials", "5", "--seed", "3",
        ]
        a = subprocess.run(args, capture_output=True, text=True)
        b = subprocess.run(args, capture_output=True, text=True)
        assert a.returncode == 0
        assert a.stdout == b.stdout


class TestGen:
    def test_gen_writes_valid_instance(self, tmp_path, capsys):
        out_path = tmp_path / "f.json"
        code, _, _ = run_main(
            [
                "gen", "--family", "column_w_constructive",
                "--n", "2", "--k", "2", "--seed", "9", "--out", str(out_path),
            ],
            capsys,
        )
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["family"] == "column_w_constructive"
        code, out, _ = run_main(
            ["check", "--file", str(out_path), "--props", "column_w"], capsys
        )
        assert code == 0
        assert json.loads(out)["verdicts"]["column_w"]["holds"] is True

    def test_gen_is_byte_deterministic(self, capsys):
        args = ["gen", "--family", "generic", "--n", "2", "--k", "1", "--seed", "4"]
        _, a, _ = run_main(args, capsys)
        _, b, _ = run_main(args, capsys)
        assert a == b

    def test_unknown_family_exits_2(self, capsys):
        code, _, _ = run_main(
            ["gen", "--family", "weird", "--n", "2", "--k", "1", "--seed", "0"], capsys
        )
        assert code == 2
