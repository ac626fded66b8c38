import csv
import io
import json
import subprocess
import sys

import pytest

from ifam import cli
from ifam.bounds import bound_full1
from ifam.core import GroundSet
from ifam.oracles import oracle_lexpair
from ifam.verify import ReportRow
from ifam.zoo import build_T2, family_from_json, family_stats


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cascade(capsys):
    code, out, _ = run(capsys, "cascade", "5", "3")
    assert code == 0
    assert json.loads(out) == [[4, 3], [2, 2]]


def test_resistant_list(capsys):
    code, out, _ = run(capsys, "resistant", "list", "12", "5")
    assert code == 0
    assert [d["gamma"] for d in json.loads(out)] == [1, 2, 7, 8, 28]


def test_bound_full1_equals_oracle(capsys):
    code, out, _ = run(capsys, "bound", "full1", "--n", "12", "--k", "4", "--gamma", "2")
    assert code == 0
    rep = json.loads(out)
    top = 8
    orc = oracle_lexpair(12, 3, 4, 2, ground=GroundSet(2, 12), max_b=top).objective
    assert rep["bound"] == orc == bound_full1(12, 4, 2).bound


def test_bound_rational_flags(capsys):
    code, out, _ = run(capsys, "bound", "ft", "--n", "12", "--a", "3", "--b", "4", "--alpha", "5/2")
    assert code == 0
    assert json.loads(out)["bound"] == "21921825/65536"
    code, out, _ = run(capsys, "bound", "ab", "--n", "9", "--a", "4", "--b", "4", "--minB", "56")
    assert code == 0 and json.loads(out)["bound"] == 112


def test_family_round_trip(capsys, tmp_path):
    path = tmp_path / "t2.json"
    code, _, err = run(capsys, "family", "build", "T2", "--k", "4", "--out", str(path))
    assert code == 0 and "wrote" in err
    code, out, _ = run(capsys, "family", "stats", str(path))
    assert code == 0
    stats = json.loads(out)
    assert stats["covering_number"] == 2
    assert stats == family_stats(build_T2(4)).to_dict()
    assert family_from_json(path.read_text()) == build_T2(4)


def test_oracle_commands(capsys):
    code, out, _ = run(capsys, "oracle", "maximal", "--n", "7", "--k", "3")
    assert code == 0 and json.loads(out)["objective"] == 15
    code, out, _ = run(capsys, "oracle", "lexpair", "--n", "10", "--a", "3", "--b", "4",
                       "--lo", "2", "--minB", "1", "--maxB", "6")
    assert code == 0 and json.loads(out)["objective"] == bound_full1(10, 4, 1).bound
    code, out, _ = run(capsys, "oracle", "table", "--n", "9", "--k", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["gamma", "oracle"] and len(rows) == 1 + 6
    code, out, _ = run(capsys, "oracle", "lemmin", "--m", "9", "--s", "4", "--k", "4", "--intersecting")
    assert code == 0 and json.loads(out)["objective"] == 61


@pytest.mark.parametrize("argv", [
    ["nosuch"],
    ["cascade", "x", "3"],
    ["bound", "nosuch", "--n", "9"],
    ["bound", "full1", "--n", "12"],
    ["bound", "full1", "--n", "12", "--k", "4", "--gamma", "999"],
    ["family", "build", "Q9"],
    ["family", "stats", "/nonexistent/file.json"],
    ["oracle", "maximal", "--n", "12", "--k", "5"],
    ["verify", "nosuch"],
    ["bound", "full1", "--bogus", "1"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err


def test_verify_violation_exits_2(capsys, monkeypatch):
    bad = [ReportRow("fake", {"n": 1}, 3, 4, "VIOLATION")]
    monkeypatch.setattr(cli, "run_suite", lambda *a: bad)
    code, out, err = run(capsys, "verify", "zoo")
    assert code == 2
    assert json.loads(out)[0]["verdict"] == "VIOLATION"
    assert "VIOLATION=1" in err


def test_verify_output_independent_of_jobs(capsys):
    _, one, _ = run(capsys, "verify", "diversity", "--n-max", "11", "--k-max", "4")
    _, three, _ = run(capsys, "verify", "diversity", "--n-max", "11", "--k-max", "4", "--jobs", "3")
    assert one == three
    code, out, _ = run(capsys, "verify", "zoo", "--n-max", "10", "--k-max", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["theorem", "params", "bound", "oracle", "verdict", "witness"]
    assert all(r[4] != "VIOLATION" for r in rows[1:])


@pytest.mark.slow
def test_verify_all_exits_clean():
    proc = subprocess.run([sys.executable, "-m", "ifam", "verify", "all", "--n-max", "12",
                           "--k-max", "5", "--jobs", "4"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    rows = json.loads(proc.stdout)
    assert rows and not any(r["verdict"] == "VIOLATION" for r in rows)
    assert "VIOLATION=0" in proc.stderr
