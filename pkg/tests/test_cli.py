import csv
import io
import json

import pytest

from planeprox import PlaneGraph, k4, write_planar_code
from planeprox.cli import INVARIANT_COLUMNS, main
from planeprox.planar_code import HEADER


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.plc"
    p.write_bytes(write_planar_code([k4()]))
    return str(p)


def test_invariants_csv(capsys, k4_file):
    code, out, _ = run(capsys, "invariants", k4_file)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == INVARIANT_COLUMNS
    assert rows[0]["min_status"] == "3" and rows[0]["proximity_num"] == "1"


def test_invariants_json_and_text(capsys, k4_file):
    code, out, _ = run(capsys, "invariants", k4_file, "--format", "json")
    assert code == 0 and json.loads(out)["wiener"] == 6
    code, out, _ = run(capsys, "invariants", k4_file, "--format", "text")
    assert code == 0 and "proximity=1/1" in out


def test_invariants_header_only(capsys, tmp_path):
    p = tmp_path / "empty.plc"
    p.write_bytes(HEADER)
    assert run(capsys, "invariants", str(p)) == (0, "", "")


def test_invariants_corrupt_header(capsys, tmp_path):
    p = tmp_path / "bad.plc"
    p.write_bytes(b"<<planar_code>>" + bytes([0]))
    code, _, err = run(capsys, "invariants", str(p))
    assert code == 3 and ">>planar_code<<" in err and "offset 0" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "invariants", str(tmp_path / "nope.plc"))[0] == 3


def test_construct(capsys, tmp_path):
    out_path = tmp_path / "t18.plc"
    code, out, _ = run(capsys, "construct", "T", "18", "--out", str(out_path))
    assert code == 0 and out.strip() == "T n=18 min_status=33 formula=33 match"
    assert out_path.read_bytes().startswith(HEADER)
    code, out, _ = run(capsys, "construct", "Q3", "--n", "26")
    assert code == 0 and "min_status=71 formula=71 match" in out
    code, out, _ = run(capsys, "construct", "T5", "32")
    assert code == 0 and "formula=139/2 formula-mismatch" in out


def test_construct_below_minimum(capsys):
    code, _, err = run(capsys, "construct", "T", "5")
    assert code == 2 and "usage error" in err


@pytest.mark.parametrize("argv", [["tri", "4", "11"], ["quad3", "8", "13"], ["tri5", "12", "16"]])
def test_table_compare(capsys, argv):
    code, out, err = run(capsys, "table", *argv, "--compare-paper")
    assert code == 0 and "OK" in err


def test_table_flags_and_csv(capsys):
    code, out, _ = run(capsys, "table", "--class", "quad3", "--n-min", "8", "--n-max", "10", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["order,min_status,count,total", "8,12,1,1", "9,,0,0", "10,15,1,1"]


def test_table_usage_errors(capsys):
    assert run(capsys, "table", "tri", "3", "8")[0] == 2
    assert run(capsys, "table", "tri", "9", "8")[0] == 2
    assert run(capsys, "table")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_enumerate_then_verify(capsys, tmp_path):
    p = tmp_path / "quad.plc"
    code, _, err = run(capsys, "enumerate", "quad", "4", "9", "--out", str(p))
    assert code == 0 and err.strip() == "34 graphs"
    code, out, _ = run(capsys, "verify", "--input", str(p))
    assert code == 0 and out.strip().endswith("checked 34 graphs, 0 problems")


def test_verify_corpus_and_constructions(capsys):
    code, out, _ = run(capsys, "verify", "quad", "4", "12")
    assert code == 0 and "0 problems" in out
    code, out, _ = run(capsys, "verify", "--constructions", "--n-max", "60", "--bounds")
    assert code == 0 and "0 problems" in out


def test_verify_path_graph(capsys, tmp_path):
    p = tmp_path / "path.plc"
    p.write_bytes(write_planar_code([PlaneGraph([[1], [0, 2], [1]])]))
    code, out, _ = run(capsys, "verify", "--input", str(p))
    assert code == 1 and "unclassifiable" in out


def test_deterministic_across_jobs(capsys):
    a = run(capsys, "table", "tri", "4", "10")
    b = run(capsys, "table", "tri", "4", "10", "--jobs", "2")
    assert a == b
