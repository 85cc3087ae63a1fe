import csv
import io
import json
import subprocess
import sys

import pytest

import golden
from mapcensus import cli
from mapcensus.series import Series1


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_csv_golden(capsys):
    code, out, _ = run(capsys, "census", "--family", "3c", "--max", "17")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "count"]
    assert [int(r[1]) for r in rows[1:]] == golden.THREE_CONNECTED_BY_EDGES
    assert rows[1][0] == "6"


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--family", "maps", "--max", "10", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [int(e["count"]) for e in doc["entries"]] == golden.MAPS_BY_EDGES


def test_census_vf_text(capsys):
    code, out, _ = run(capsys, "census", "--family", "2c", "--mode", "vf", "--max", "3",
                       "--format", "text")
    assert code == 0
    assert out.startswith("# two_connected, by_vertices_faces, max 3")


def test_census_all_families_csv(capsys, tmp_path):
    target = tmp_path / "all.csv"
    code, out, _ = run(capsys, "census", "--family", "all", "--max", "8", "-o", str(target))
    assert code == 0 and out == ""
    rows = list(csv.reader(target.open()))
    assert rows[0] == ["family", "n", "count"]
    fams = {r[0] for r in rows[1:]}
    assert fams == {"maps", "two_connected", "three_connected"}


def test_census_all_families_json(capsys):
    code, out, _ = run(capsys, "census", "--family", "all", "--max", "6", "--format", "json")
    assert code == 0
    assert [d["family"] for d in json.loads(out)] == ["maps", "two_connected", "three_connected"]


@pytest.mark.parametrize("argv", [
    ["census", "--family", "trees"],
    ["census", "--max", "0"],
    ["census", "--max", "ten"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.run(argv)
    assert exc.value.code == 1


def test_oracle_budget_out_of_range(capsys):
    code, _, err = run(capsys, "oracle", "--budget", "9")
    assert code == 1
    assert "budget" in err


def test_oracle_small(capsys, tmp_path):
    codes = tmp_path / "codes.txt"
    code, out, _ = run(capsys, "oracle", "--budget", "4", "--format", "json",
                       "--dump-codes", str(codes))
    assert code == 0
    doc = json.loads(out)
    assert doc["agreement"] is True and doc["n_max"] == 4
    assert len(codes.read_text().splitlines()) == 2 + 4 + 14 + 57


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max", "12", "--max-2v", "8")
    assert code == 0
    assert out.rstrip().endswith("0 failed")


def test_verify_failure_exit_code(capsys, monkeypatch):
    from mapcensus import decomposition
    bad = decomposition.report("broken", Series1([0, 1], 1), 1)
    monkeypatch.setattr(decomposition, "run_suite", lambda n, n2: [bad])
    code, out, _ = run(capsys, "verify")
    assert code == 2 and "1 failed" in out


def test_divisibility_failure_exit_code(capsys, monkeypatch):
    from mapcensus import burnside

    def boom(family, n):
        raise burnside.DivisibilityError("Burnside coefficient 13 at n=6 is not divisible by 12")
    monkeypatch.setattr(burnside, "census_edges", boom)
    code, _, err = run(capsys, "census", "--family", "3c")
    assert code == 2 and "not divisible" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mapcensus", "census", "--family", "2c", "--max", "5"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines() == ["n,count", "1,2", "2,1", "3,2", "4,3", "5,6"]
