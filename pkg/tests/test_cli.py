"""CLI behavior: commands, reports, exit codes, determinism."""

import json

import pytest
import yaml

from omegarb.cli import main

ABELIAN_CATALOG = """
- name: abelian2
  dim: 2
  source: "test fixture"
  basis: [a, b]
  brackets: []
  omega: []
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_compatible_weight_zero(capsys):
    code, out, _ = run(capsys, "solve", "L1", "bc", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 3
    assert len(data["components"]) == 2
    assert data["decomposition_confirmed"] is True
    assert sorted(c["dim"] for c in data["components"]) == [3, 3]


def test_solve_second_algebra(capsys):
    code, out, _ = run(capsys, "solve", "L2", "bc", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 2
    assert len(data["components"]) == 3


def test_solve_abelian_zero_ideal(tmp_path, capsys):
    cat = tmp_path / "cat.yaml"
    cat.write_text(ABELIAN_CATALOG)
    code, out, _ = run(
        capsys, "solve", "abelian2", "b", "--catalog", str(cat), "--json"
    )
    data = json.loads(out)
    assert code == 0
    assert data["generators"] == []
    assert data["dim"] == 4  # n^2 for the 2-dimensional algebra


def test_solve_lex_order_output(capsys):
    code, out, _ = run(capsys, "solve", "L1", "bc", "--order", "lex", "--json")
    assert code == 0
    assert json.loads(out)["order"] == "lex"


def test_solve_unknown_algebra(capsys):
    code, _, err = run(capsys, "solve", "nope", "bc")
    assert code == 2
    assert "unknown algebra" in err


def test_unknown_profile_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "L1", "zz"])
    assert exc.value.code == 2


def test_validate_builtin_catalog(tmp_path, capsys):
    from importlib import resources

    text = resources.files("omegarb").joinpath("data/catalog.yaml").read_text("utf-8")
    path = tmp_path / "catalog.yaml"
    path.write_text(text)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert "L1: valid" in out
    assert "B: stub" in out


def test_validate_rejects_identity_violation(tmp_path, capsys):
    path = tmp_path / "bad.yaml"
    path.write_text(
        '- name: broken\n  dim: 3\n  basis: [x, y, z]\n'
        '  brackets: ["[x,y] = y", "[y,z] = z"]\n  omega: ["w(x,y) = 2"]\n'
    )
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 2
    assert "REJECTED" in out and "x, y, z" in out


def test_validate_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/file.yaml")
    assert code == 2


def test_table_one_report(capsys):
    code, out, _ = run(capsys, "table", "1", "--json")
    assert code == 0
    data = json.loads(out)
    by_name = {r["algebra"]: r for r in data["rows"]}
    assert by_name["L1"]["status"] == "PASS"
    assert by_name["L1"]["computed"]["dim"] == 3
    assert by_name["L2"]["status"] == "PASS"
    for stub in ("B", "A_alpha", "C_alpha"):
        assert by_name[stub]["status"] == "SKIPPED"
    assert data["summary"]["FAIL"] == 0


def test_table_two_discrepancy(capsys):
    code, out, _ = run(capsys, "table", "2", "--json")
    assert code == 0
    data = json.loads(out)
    row = {r["algebra"]: r for r in data["rows"]}["L1"]
    assert row["status"] == "DISCREPANCY"
    assert row["computed"]["dim"] == 2
    assert any("published value 3" in d for d in row["discrepancies"])


def test_table_json_deterministic(capsys):
    _, out1, _ = run(capsys, "table", "1", "--json")
    _, out2, _ = run(capsys, "table", "1", "--json")
    assert out1 == out2


def test_table_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "table", "2", "--json")
    _, parallel, _ = run(capsys, "table", "2", "--jobs", "3", "--json")
    assert serial == parallel


def test_table_failure_exit_code(tmp_path, capsys):
    expect = {
        "table": 1,
        "profile": "bc",
        "rows": [{"algebra": "L1", "dim": 99, "components": 2, "candidates": "table1_L1"}],
    }
    path = tmp_path / "exp.yaml"
    path.write_text(yaml.safe_dump(expect))
    code, out, _ = run(capsys, "table", "1", "--expect", str(path), "--json")
    assert code == 1
    data = json.loads(out)
    assert data["rows"][0]["status"] == "FAIL"


def test_table_empty_expectations(tmp_path, capsys):
    path = tmp_path / "empty.yaml"
    path.write_text("table: 1\nprofile: bc\nrows: []\n")
    code, out, _ = run(capsys, "table", "1", "--expect", str(path), "--json")
    assert code == 0
    assert json.loads(out)["rows"] == []


def test_construct_left_symmetric(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    op.write_text(
        "rows:\n  - ['0','0','d']\n  - ['0','0','e']\n  - ['0','0','0']\n"
        "params: {d: 1, e: 1}\n"
    )
    code, out, _ = run(capsys, "construct", "lsa", "L1", "--op", str(op))
    assert code == 0
    assert "x*y = -z" in out and "y*y = -z" in out
    assert "left-symmetric identity holds" in out


def test_construct_homlie_with_series(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    op.write_text("rows:\n  - ['0','a','b']\n  - ['0','0','0']\n  - ['0','0','0']\n")
    code, out, _ = run(
        capsys,
        "construct", "homlie", "L2", "--op", str(op),
        "--param", "a=2", "--param", "b=3", "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert "[x,y] = -3*z" in data["brackets"]
    assert "[x,z] = 2*z" in data["brackets"]
    assert data["series"]["category"] == "solvable"


def test_construct_deform_zero_operator(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    op.write_text("rows:\n  - ['0','0','0']\n  - ['0','0','0']\n  - ['0','0','0']\n")
    code, out, _ = run(capsys, "construct", "deform", "L1", "--op", str(op), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["algebras"][0]["brackets"] == []
    assert data["algebras"][0]["omega"] == []


def test_construct_precondition_failure_exits_nonzero(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    # weight-0 compatible on L1_2 but squares to a nonzero map
    op.write_text(
        "rows:\n  - ['0','0','0','1']\n  - ['0','0','0','1']\n"
        "  - ['1','1','0','0']\n  - ['0','0','0','0']\n"
    )
    code, _, err = run(capsys, "construct", "homlie", "L1_2", "--op", str(op))
    assert code == 1
    assert "R^2" in err


def test_construct_dimension_mismatch(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    op.write_text("rows:\n  - ['0','0']\n  - ['0','0']\n")
    code, _, err = run(capsys, "construct", "lsa", "L1", "--op", str(op))
    assert code == 2


def test_classify_command(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    op.write_text("rows:\n  - ['-1','0','0']\n  - ['0','-1','0']\n  - ['0','0','-1']\n")
    code, out, _ = run(
        capsys, "classify", "L1", "--op", str(op), "--weight", "1", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["rota_baxter"] and data["isometric"] and data["invertible"]
    assert not data["compatible"]


def test_solve_with_explicit_candidates_file(tmp_path, capsys):
    from importlib import resources

    text = resources.files("omegarb").joinpath(
        "data/candidates/table1_L1.yaml"
    ).read_text("utf-8")
    path = tmp_path / "cands.yaml"
    path.write_text(text)
    code, out, _ = run(
        capsys, "solve", "L1", "bc", "--candidates", str(path), "--json"
    )
    assert code == 0
    assert json.loads(out)["decomposition_confirmed"] is True


def test_solve_parameterized_algebra(capsys):
    code, out, _ = run(capsys, "solve", "Atilde_alpha", "bc", "--alpha=-1/4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == "-1/4"


def test_solve_json_deterministic(capsys):
    _, out1, _ = run(capsys, "solve", "L1", "bi1", "--json")
    _, out2, _ = run(capsys, "solve", "L1", "bi1", "--json")
    assert out1 == out2


def test_table_three_full_reproduction(capsys):
    code, out, _ = run(capsys, "table", "3", "--json")
    assert code == 0
    data = json.loads(out)
    rows = {r["algebra"]: r for r in data["rows"]}
    assert rows["L1_1"]["status"] == "PASS"
    assert rows["L1_1"]["computed"]["dim"] == 6
    assert rows["L1_2"]["status"] == "PASS"
    assert rows["L1_2"]["computed"]["dim"] == 5
    assert rows["L1_2"]["computed"]["components"] == 1
    assert rows["L1_8"]["status"] == "PASS"
    assert rows["L1_8"]["computed"]["dim"] == 4
    assert rows["L1_8"]["computed"]["components"] == 3
    assert sorted(rows["L1_8"]["computed"]["labels"]) == [
        "nilpotent", "solvable", "solvable",
    ]
    atilde = rows["Atilde_alpha"]
    assert atilde["status"] == "DISCREPANCY"
    assert atilde["computed"]["dim"] == 3
    assert atilde["computed"]["components"] == 4
    assert data["summary"]["FAIL"] == 0
    skipped = [r["algebra"] for r in data["rows"] if r["status"] == "SKIPPED"]
    assert "L1_3" in skipped and "Ctilde_alpha" in skipped


def test_construct_deform_with_steps(tmp_path, capsys):
    op = tmp_path / "op.yaml"
    op.write_text(
        "rows:\n  - ['-1','1','1']\n  - ['-1','1','1']\n  - ['0','0','0']\n"
    )
    code, out, _ = run(
        capsys, "construct", "deform", "L1", "--op", str(op), "--steps", "2", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["algebras"]) == 2
    assert "[x,y] = -z" in data["algebras"][0]["brackets"]
    assert data["algebras"][1]["brackets"] == []  # R^2 = 0 here
