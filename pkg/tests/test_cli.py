import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from conicmod.cli import OutputRecord, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _norm(cell):
    try:
        return int(cell)
    except ValueError:
        pass
    try:
        return round(float(cell), 12) + 0.0  # folds -0.0 into 0.0
    except ValueError:
        return cell


def csv_rows(text):
    return [[_norm(c) for c in row] for row in csv.reader(io.StringIO(text))]


GOLDEN_CASES = [
    ("scan_a-3_p29.csv", ["scan", "--a", "-3", "--p-max", "29", "--format", "csv"]),
    ("indexmap_a11.csv", ["indexmap", "--a", "11", "--format", "csv"]),
    ("group_a-3_p5.csv", ["group", "--a", "-3", "--p", "5", "--format", "csv"]),
    ("fbar_a6.csv", ["fbar", "--a", "6", "--format", "csv"]),
    ("gauss_p3.csv", ["gauss", "--p", "3", "--format", "csv"]),
]


@pytest.mark.parametrize("name,argv", GOLDEN_CASES)
def test_golden_csv(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert csv_rows(out) == csv_rows((GOLDEN / name).read_text())
    # second run is identical
    assert run(capsys, *argv)[1] == out


def test_golden_json(capsys):
    code, out, _ = run(capsys, "fbar", "--a", "-5", "--format", "json")
    assert code == 0
    got = json.loads(out)
    want = json.loads((GOLDEN / "fbar_a-5.json").read_text())
    assert got["command"] == want["command"] == "fbar"
    assert got["inputs"] == want["inputs"]
    for key in ("value", "closed_form", "reindexed"):
        for part in ("re", "im"):
            assert round(got["outputs"][key][part], 12) == round(want["outputs"][key][part], 12)
    assert got["outputs"]["terms"] == "q1+q1^3+q1^7+q1^9"


def test_scan_parallel_matches_serial(capsys):
    serial = run(capsys, "scan", "--a", "5", "--p-max", "97", "--format", "csv")[1]
    parallel = run(capsys, "scan", "--a", "5", "--p-max", "97", "--format", "csv", "--jobs", "3")[1]
    assert serial == parallel


def test_scan_period_five(capsys):
    out = run(capsys, "scan", "--a", "5", "--p-max", "97", "--format", "json")[1]
    recs = [json.loads(line) for line in out.splitlines()]
    by_class = {}
    for r in recs:
        p = r["inputs"]["p"]
        if p != 5:
            assert by_class.setdefault(p % 5, r["outputs"]["b"]) == r["outputs"]["b"]
    assert len(by_class) == 4


def test_scan_single_row(capsys):
    out = run(capsys, "scan", "--a", "1", "--p-max", "3", "--format", "csv")[1]
    assert csv_rows(out) == [["a", "p", "N", "b", "symbol"], [1, 3, 2, 1, 1]]


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["symbol", "--a", "-3", "--n", "7"], {"value": 1}),
        (["symbol", "--a", "5", "--n", "1"], {"value": 1}),
        (["symbol", "--a", "6", "--n", "35"], {"value": -1}),
        (["count", "--a", "-3", "--p", "29"], {"N": 30, "b": -1}),
        (["count", "--a", "-3", "--p", "3"], {"N": 6, "b": -3}),
        (["count", "--a", "7", "--p", "7"], {"N": 14, "b": -7}),
        (["count", "--a", "3", "--p", "2"], {"N": 2, "b": 0}),
        (["conductor", "--a", "6"], {"conductor": 24, "level": None, "kronecker_period": 24}),
        (["conductor", "--a", "-3"], {"conductor": 3, "level": 3, "kronecker_period": 3}),
    ],
)
def test_json_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert json.loads(out)["outputs"] == expected


def test_group_chain(capsys):
    out = run(capsys, "group", "--a", "2", "--p", "7", "--format", "json")[1]
    recs = [json.loads(line)["outputs"] for line in out.splitlines()]
    assert len(recs) == 6
    assert (recs[-1]["x"], recs[-1]["y"]) == (0, 1)


def test_fbar_table_and_gauss(capsys):
    out = run(capsys, "fbar", "--a", "5", "--format", "json")[1]
    rec = json.loads(out)["outputs"]
    assert abs(rec["value"]["re"] - 2.23606797749979) < 1e-12
    assert rec["closed_form"]["re"] == math.sqrt(5)
    out = run(capsys, "gauss", "--p", "3", "--format", "json")[1]
    rec = json.loads(out)["outputs"]
    for key in ("character", "quadratic"):
        assert abs(rec[key]["im"] - 1.7320508) < 1e-7 and abs(rec[key]["re"]) < 1e-12


def test_theta_quadexp_solutions_partial(capsys):
    rec = json.loads(run(capsys, "theta", "--tau-im", "1", "--terms", "10", "--format", "json")[1])
    assert abs(rec["outputs"]["G"]["re"] - 1.0018674427) < 1e-10
    rec = json.loads(run(capsys, "quadexp", "--a", "-10", "--format", "json")[1])
    assert abs(rec["outputs"]["value"]["im"] - math.sqrt(10)) < 1e-12
    out = run(capsys, "solutions", "--a", "-3", "--p", "5", "--format", "csv")[1]
    assert csv_rows(out)[1:] == [[-3, 5, x, y] for x, y in
                                 [(0, 1), (0, 4), (2, 2), (2, 3), (3, 2), (3, 3)]]
    out = run(capsys, "partial", "--a", "3", "--periods", "2", "--format", "json")[1]
    vals = [json.loads(line)["outputs"]["value"]["re"] for line in out.splitlines()]
    assert all(abs(v - math.sqrt(3)) < 1e-12 for v in vals)


def test_table_format(capsys):
    out = run(capsys, "count", "--a", "-3", "--p", "29")[1]
    lines = out.splitlines()
    assert lines[0].split() == ["a", "p", "N", "b"]
    assert lines[1].split() == ["-3", "29", "30", "-1"]


def test_output_flag(tmp_path, capsys):
    dest = tmp_path / "out.csv"
    assert main(["scan", "--a", "-3", "--p-max", "29", "--format", "csv", "--output", str(dest)]) == 0
    assert capsys.readouterr().out == ""
    assert csv_rows(dest.read_text()) == csv_rows((GOLDEN / "scan_a-3_p29.csv").read_text())


def test_global_flags_before_subcommand(capsys):
    out = run(capsys, "--format", "csv", "symbol", "--a", "2", "--n", "7")[1]
    assert out == "a,n,value\n2,7,1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["conductor", "--a", "8"],
        ["fbar", "--a", "12"],
        ["count", "--a", "3", "--p", "9"],
        ["quadexp", "--a", "5"],
        ["theta", "--tau-im", "0"],
        ["indexmap", "--a", "4"],
    ],
)
def test_domain_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("conicmod:")


def test_internal_error_exit_one(capsys, monkeypatch):
    import conicmod.symbols

    def boom(a, n):
        raise RuntimeError("boom")

    monkeypatch.setattr(conicmod.symbols, "kronecker", boom)
    assert run(capsys, "symbol", "--a", "1", "--n", "1")[0] == 1


def test_record_json_round_trip():
    rec = OutputRecord("x", {"a": 2**40 + 1}, {"z": complex(0.1, -1 / 3), "n": -7})
    back = json.loads(rec.to_json())
    assert back["inputs"]["a"] == 2**40 + 1
    assert back["outputs"]["z"] == {"re": 0.1, "im": -1 / 3}
    assert back["outputs"]["n"] == -7


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "conicmod.cli", "count", "--a", "5", "--p", "11", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "a,p,N,b\n5,11,10,1\n"
