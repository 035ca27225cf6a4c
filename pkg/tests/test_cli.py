import json

import pytest

from tessdom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tess_list(capsys):
    code, out, _ = run(capsys, "tess", "list")
    assert code == 0
    assert len(out.strip().splitlines()) == 11


def test_tess_show_accepts_alias(capsys):
    code, out, _ = run(capsys, "tess", "show", "--kind", "(8^2,4)")
    assert code == 0
    assert "kind      4.8.8" in out
    assert "validate  ok" in out


def test_build_solve_check_render_flow(tmp_path, capsys):
    graph = tmp_path / "g.graph"
    sel = tmp_path / "w.sel"
    svg = tmp_path / "w.svg"
    code, _, _ = run(capsys, "graph", "build", "--kind", "3.3.3.3.3.3",
                     "--m", "4", "--n", "4", "--out", str(graph))
    assert code == 0
    code, out, _ = run(capsys, "solve", "--graph", str(graph),
                       "--time-limit", "60", "--out", str(sel))
    assert code == 0
    assert "density=9/16" in out and "status=optimal" in out
    code, out, _ = run(capsys, "check", "--graph", str(graph),
                       "--selection", str(sel))
    assert code == 0
    assert "half_dependent=yes" in out
    code, _, _ = run(capsys, "render", "--graph", str(graph),
                     "--selection", str(sel), "--out", str(svg))
    assert code == 0
    assert svg.read_text().count("<polygon") == 32


def test_solve_with_target(tmp_path, capsys):
    graph = tmp_path / "g.graph"
    run(capsys, "graph", "build", "--kind", "3.3.3.3.3.3",
        "--m", "3", "--n", "3", "--out", str(graph))
    code, out, _ = run(capsys, "solve", "--graph", str(graph),
                       "--target", "1/2", "--time-limit", "60")
    assert code == 0
    assert "status=lower_bound_only" in out


def test_bound_aggregate(capsys):
    code, out, _ = run(capsys, "bound", "aggregate", "--kind", "3.12.12")
    assert code == 0
    assert "value 7/9" in out


def test_bound_lp_and_weighted(tmp_path, capsys):
    graph = tmp_path / "g.graph"
    run(capsys, "graph", "build", "--kind", "6.6.6", "--m", "3", "--n", "3",
        "--out", str(graph))
    code, out, _ = run(capsys, "bound", "lp", "--graph", str(graph))
    assert code == 0
    assert "value 2/3" in out
    weights = tmp_path / "w.txt"
    weights.write_text("0 1\n4 1/2\n")
    code, out, _ = run(capsys, "bound", "weighted", "--graph", str(graph),
                       "--weights", str(weights))
    assert code == 0
    assert "provenance weighted-lp" in out


def test_bound_pinned(tmp_path, capsys):
    graph = tmp_path / "g.graph"
    zeros = tmp_path / "z.sel"
    run(capsys, "graph", "build", "--kind", "3.3.3.3.3.3",
        "--m", "2", "--n", "2", "--out", str(graph))
    code, _, _ = run(capsys, "solve", "--graph", str(graph), "--out", str(zeros))
    assert code == 0
    code, out, _ = run(capsys, "bound", "pinned", "--graph", str(graph),
                       "--zeros", str(zeros))
    assert code == 0
    assert "provenance pinned" in out


def test_table_bounds_all(tmp_path, capsys):
    out_json = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--id", "bounds_all",
                       "--out", str(out_json))
    assert code == 0
    assert out.count("ok") == 6
    doc = json.loads(out_json.read_text())
    assert doc["format"] == "tessdom-table/1"
    assert [row["computed"] for row in doc["rows"]] == \
        ["2/3", "3/5", "13/21", "2/3", "19/30", "7/9"]


def test_table_known_disagreement_exits_2(capsys):
    # the published 2x2 elongated-triangular value is refuted by the solver
    code, out, _ = run(capsys, "table", "--id", "t3344_torus",
                       "--max-n", "2", "--time-limit", "60")
    assert code == 2
    assert "MISMATCH" in out
    assert "known discrepancy" in out


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as err:
        main(["table", "--id", "not_a_table"])
    assert err.value.code == 1


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "solve", "--graph", "no/such/file.graph")
    assert code == 1
    assert "error" in err


def test_mismatched_selection_exits_1(tmp_path, capsys):
    g1 = tmp_path / "a.graph"
    g2 = tmp_path / "b.graph"
    sel = tmp_path / "w.sel"
    run(capsys, "graph", "build", "--kind", "4.4.4.4", "--m", "2", "--n", "2",
        "--out", str(g1))
    run(capsys, "graph", "build", "--kind", "4.4.4.4", "--m", "2", "--n", "3",
        "--out", str(g2))
    run(capsys, "solve", "--graph", str(g1), "--out", str(sel))
    code, _, err = run(capsys, "check", "--graph", str(g2),
                       "--selection", str(sel))
    assert code == 1
    assert "does not match" in err


def test_strict_budget_expiry_exits_3(tmp_path, capsys):
    graph = tmp_path / "g.graph"
    run(capsys, "graph", "build", "--kind", "3.3.3.3.3.3", "--m", "7",
        "--n", "7", "--out", str(graph))
    code, out, _ = run(capsys, "solve", "--graph", str(graph),
                       "--time-limit", "0.01", "--strict")
    assert code == 3
    assert "lower_bound_only" in out
