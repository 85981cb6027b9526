from __future__ import annotations

import pytest

from maxleaf.cli import main
from maxleaf.graphio import read_graph_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def k33_file(tmp_path, capsys):
    path = tmp_path / "k33.graph"
    assert run(capsys, "gen", "--model", "k33", "--out", str(path))[0] == 0
    return path


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "gen", "--model", "random-cubic", "--n", "10", "--seed", "4", "--out", str(a))
    run(capsys, "gen", "--model", "random-cubic", "--n", "10", "--seed", "4", "--out", str(b))
    assert a.read_text() == b.read_text()
    assert read_graph_file(a).graph.is_cubic()


def test_gen_errors(capsys):
    assert run(capsys, "gen", "--model", "random-cubic")[0] == 2
    assert run(capsys, "gen", "--model", "random-cubic", "--n", "7")[0] == 2
    assert run(capsys, "gen", "--model", "nope")[0] == 2


def test_reduce_reports_counts(k33_file, tmp_path, capsys):
    out_path = tmp_path / "k33.inst"
    code, out, _ = run(capsys, "reduce", "--in", str(k33_file), "--out", str(out_path))
    assert code == 0
    assert "degree-2 vertices: 27" in out
    gf = read_graph_file(out_path)
    assert gf.n == 81 and len(gf.roles) == 81


def test_reduce_rejects_k4(tmp_path, capsys):
    path = tmp_path / "k4.graph"
    run(capsys, "gen", "--model", "k4", "--out", str(path))
    code, _, err = run(capsys, "reduce", "--in", str(path))
    assert code == 1 and "IsK4" in err


def test_forward_then_backward(k33_file, tmp_path, capsys):
    tree = tmp_path / "tree.graph"
    code, out, _ = run(capsys, "forward", "--in", str(k33_file), "--is", "0,1,2", "--out", str(tree))
    assert code == 0 and "weighted leaves: 27" in out
    code, out, _ = run(capsys, "backward", "--in", str(k33_file), "--tree", str(tree))
    assert code == 0
    assert "independent set: 0 1 2" in out
    assert "final bound: leaves <= ceil(3.75n + 1.5|I|): PASS" in out


def test_backward_rejects_mismatched_tree(k33_file, capsys):
    code, _, err = run(capsys, "backward", "--in", str(k33_file), "--tree", str(k33_file))
    assert code == 2 and "vertices" in err


def test_oracles(k33_file, capsys):
    assert "mis: 3" in run(capsys, "oracle", "mis", "--in", str(k33_file))[1]
    assert "vc: 3" in run(capsys, "oracle", "vc", "--in", str(k33_file))[1]
    assert "maxleaf: 4" in run(capsys, "oracle", "maxleaf", "--in", str(k33_file))[1]
    assert "cds: 2" in run(capsys, "oracle", "cds", "--in", str(k33_file))[1]
    code, _, err = run(capsys, "oracle", "mis", "--in", str(k33_file), "--budget-vertices", "3")
    assert code == 1 and "BudgetExceeded" in err


def test_expand_theta(tmp_path, capsys):
    path = tmp_path / "theta.graph"
    run(capsys, "gen", "--model", "theta", "--out", str(path))
    code, out, _ = run(capsys, "expand", "--in", str(path))
    assert code == 0 and "vertices: 20" in out
    assert "wml: 1" in run(capsys, "oracle", "wml", "--in", str(path))[1]


def test_verify_gadgets(capsys):
    code, out, _ = run(capsys, "verify-gadgets")
    assert code == 0
    assert "gadget bounds: max leaves 6/4/3 PASS" in out
    assert "tree patterns: PASS" in out


def test_transfer(capsys):
    code, out, _ = run(capsys, "transfer", "--epsilon", "0.001", "--problem", "mis")
    assert code == 0 and "gamma=0.0705 ratio=0.8590" in out
    assert run(capsys, "transfer", "--epsilon", "0.5")[0] == 2
    assert run(capsys, "transfer")[0] == 2


def test_parse_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("p graph 3 1\ne 0 5\n")
    code, _, err = run(capsys, "oracle", "mis", "--in", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "oracle", "mis", "--in", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "bogus")[0] == 2
