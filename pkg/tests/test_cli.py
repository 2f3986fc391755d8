"""
tests/test_cli.py - Test commands end to end through main()
"""

# stdlib
import csv
import json
import math

# library
import numpy as np
import pytest

# module
from mfold_bounds.cli import main
from mfold_bounds.cli.base import format_value, jsonable


def run(tmp_path, *args, name: str = "out.json") -> tuple[int, object]:
    """Runs a command writing to tmp_path and returns the exit code and file path"""
    path = tmp_path / name
    code = main([*args, "--output", str(path)])
    return code, path


def read_rows(path) -> list[dict]:
    if path.suffix == ".csv":
        with path.open(encoding="utf-8") as fin:
            return list(csv.DictReader(fin))
    return json.loads(path.read_text(encoding="utf-8"))["rows"]


def test_bounds_single_point(tmp_path):
    """Tests a single Θ point against the closed-form values"""
    code, path = run(tmp_path, "bounds", "--lam", "1", "--beta", "0")
    assert code == 0
    data = json.loads(path.read_text())
    row = data["rows"][0]
    assert row["bound_am1"] == pytest.approx(math.sqrt(2 / 3))
    assert row["bound_a2m1"] == pytest.approx(2 / 3)
    assert row["branch_linear"] == pytest.approx(1)
    assert row["active_branch"] == "sqrt"
    assert data["meta"]["command"] == "bounds"
    assert data["meta"]["config"]["tau"] == "1+0i"
    assert "timestamp" not in data["meta"]


def test_bounds_csv_json_parity(tmp_path):
    """Tests that both formats carry the same numbers"""
    grid = ["--grid", "beta=0:0.9:4", "--grid", "m=1:2:2", "--lam", "0.5"]
    assert run(tmp_path, "bounds", *grid, "--format", "csv", name="b.csv")[0] == 0
    assert run(tmp_path, "bounds", *grid, "--format", "json", name="b.json")[0] == 0
    csv_rows = read_rows(tmp_path / "b.csv")
    json_rows = read_rows(tmp_path / "b.json")
    assert len(csv_rows) == len(json_rows) == 8
    for first, second in zip(csv_rows, json_rows):
        for key in ("bound_am1", "bound_a2m1", "branch_linear", "branch_sqrt"):
            assert float(first[key]) == second[key]
        assert first["active_branch"] == second["active_branch"]


def test_bounds_corollary(tmp_path):
    """Tests corollary evaluation and its substitution check"""
    code, path = run(tmp_path, "bounds", "--corollary", "9", "--lam", "1", "--beta", "0.5")
    assert code == 0
    row = read_rows(path)[0]
    assert row["bound_a2m1"] == pytest.approx(1 / 3)
    assert row["source"] == "corollary 9"
    assert run(tmp_path, "bounds", "--corollary", "9", "--beta", "0.5")[0] == 2
    code, path = run(tmp_path, "bounds", "--corollary", "5", "--alpha", "0.5")
    assert code == 0
    assert read_rows(path)[0]["kind"] == "Q"


def test_usage_errors(tmp_path, capsys):
    """Tests that invalid flags exit with 2"""
    for args in (
        ("bounds", "--grid", "beta=0:1:0"),
        ("bounds", "--gamma", "2"),
        ("bounds", "--beta", "1"),
        ("probe", "--n", "0"),
        ("membership", "--a", "1+2i3"),
        ("membership", "--radius", "1.5"),
        ("reduce", "--points", "0"),
        ("bounds", "--unknown", "1"),
    ):
        assert run(tmp_path, *args)[0] == 2, args
    assert main([]) == 2
    err = capsys.readouterr().err
    assert '"param": "beta"' in err


def test_verify(tmp_path, capsys):
    """Tests the default verify run and fault detection"""
    code, path = run(tmp_path, "verify", "--verbose")
    assert code == 0
    rows = read_rows(path)
    assert all(row["passed"] for row in rows)
    assert "cases" in capsys.readouterr().out
    code, path = run(tmp_path, "verify", "--fault", name="fault.json")
    assert code == 1
    assert not all(row["passed"] for row in read_rows(path))


def test_probe(tmp_path):
    """Tests certification runs and their determinism"""
    args = ("probe", "--alpha", "1", "--lam", "0.5", "--m", "2", "--n", "20000", "--seed", "7")
    first = run(tmp_path, *args, name="first.json")
    second = run(tmp_path, *args, name="second.json")
    assert first[0] == second[0] == 0
    assert first[1].read_bytes() == second[1].read_bytes()
    code, path = run(tmp_path, "probe", "--strategy", "grid", "--n", "500", "--alpha", "1")
    assert code == 0
    row = read_rows(path)[0]
    assert row["ratio_am1"] >= 1 - 1e-9
    assert row["passed"] is True


def test_membership(tmp_path):
    """Tests margins for the identity and for a dominant coefficient"""
    code, path = run(tmp_path, "membership", "--alpha", "1")
    assert code == 0
    rows = read_rows(path)
    assert len(rows) == 3
    assert rows[0]["forward_margin"] == pytest.approx(math.pi / 2)
    code, path = run(
        tmp_path, "membership", "--beta", "0", "--m", "2", "--a", "1000", "--radius", "0.99"
    )
    assert code == 0
    assert read_rows(path)[0]["forward_margin"] < 0


def test_exemplars(tmp_path):
    """Tests the catalog and the pairing audit"""
    code, path = run(tmp_path, "exemplars", "--m", "2")
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data["rows"]) == 3
    assert all(row["composition_residual"] <= 1e-10 for row in data["rows"])
    assert {"forward", "inverse", "listed", "residual", "inverts"} == set(data["audit"][0])


def test_reduce(tmp_path):
    """Tests the nine corollary reductions"""
    code, path = run(tmp_path, "reduce", "--format", "csv", name="reduce.csv")
    assert code == 0
    rows = read_rows(path)
    assert [int(row["corollary"]) for row in rows] == list(range(1, 10))
    assert all(float(row["theorem_deviation"]) <= 1e-12 for row in rows)
    assert all(row["passed"] == "true" for row in rows)


def test_verify_default_json(tmp_path):
    """Tests that the default verify report is valid json with plain booleans"""
    code, path = run(tmp_path, "verify")
    assert code == 0
    rows = read_rows(path)
    assert all(row["passed"] is True for row in rows)
    assert all(isinstance(row["max_deviation"], float) for row in rows)


def test_unwritable_output(tmp_path, capsys):
    """Tests that a report path that cannot be written is a usage error"""
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    code = main(["bounds", "--output", str(blocker / "out.json")])
    assert code == 2
    assert '"param": "output"' in capsys.readouterr().err


def test_bounds_branches(tmp_path):
    """Tests the class Θ branch table and its class checks"""
    code, path = run(
        tmp_path, "bounds", "--branches", "--grid", "lam=0:1:3", "--grid", "beta=0:0.5:2"
    )
    assert code == 0
    rows = read_rows(path)
    assert len(rows) == 6
    last = rows[-1]
    assert last["lam"] == 1 and last["beta"] == 0.5
    assert last["ratio"] == pytest.approx(last["branch_linear"] / last["branch_sqrt"])
    code, path = run(tmp_path, "bounds", "--branches", "--lam", "1", name="one.json")
    row = read_rows(path)[0]
    assert row["branch_linear"] == pytest.approx(1)
    assert row["ratio"] == pytest.approx(math.sqrt(6) / 2)
    assert row["active_branch"] == "sqrt"
    assert run(tmp_path, "bounds", "--branches", "--alpha", "0.5")[0] == 2
    assert run(tmp_path, "bounds", "--branches", "--corollary", "9")[0] == 2


def test_csv_keeps_notes_and_tables(tmp_path):
    """Tests that csv reports carry notes and extra tables"""
    code, path = run(tmp_path, "membership", "--alpha", "1", "--format", "csv", name="mem.csv")
    assert code == 0
    rows = read_rows(path)
    assert all("divides" in row["notes"] for row in rows)
    code, path = run(tmp_path, "exemplars", "--format", "csv", name="ex.csv")
    assert code == 0
    assert len(read_rows(path)) == 3
    audit = read_rows(tmp_path / "ex.audit.csv")
    assert len(audit) == 9
    assert {row["inverts"] for row in audit} == {"true", "false"}


def test_symmetry_order_cap(tmp_path):
    """Tests that membership rejects symmetry orders above 16"""
    assert run(tmp_path, "membership", "--m", "17")[0] == 2
    assert run(tmp_path, "membership", "--m", "16", "--order", "2")[0] == 0


def test_writers_unwrap_numpy_scalars():
    """Tests that numpy scalars are written like python numbers"""
    data = {"passed": np.bool_(True), "value": np.float64(0.5), "nan": np.float64("nan")}
    assert json.dumps(jsonable(data)) == '{"passed": true, "value": 0.5, "nan": "nan"}'
    assert format_value(np.bool_(False)) == "false"
    assert format_value(np.float64(0.1)) == "0.10000000000000001"
