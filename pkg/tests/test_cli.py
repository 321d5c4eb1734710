import csv
import subprocess
import sys

import pytest

from conftest import BRIDGED_EDGES
from leaderfollower.cli import main


@pytest.fixture
def bridged_file(tmp_path):
    path = tmp_path / "bridged.tsv"
    path.write_text("".join(f"n{u}\tn{v}\n" for u, v in BRIDGED_EDGES))
    return path


def _generate(tmp_path, seed=3, m=60):
    g, t = tmp_path / f"g{seed}.tsv", tmp_path / f"t{seed}.tsv"
    code = main(["generate", "--communities", "5", "--min-size", "2", "--max-size", "9",
                 "--inter-edges", str(m), "--seed", str(seed),
                 "--graph-out", str(g), "--truth-out", str(t)])
    assert code == 0
    return g, t


def test_detect_lf_bridged(bridged_file, tmp_path):
    out = tmp_path / "pred.tsv"
    assert main(["detect", "--algo", "lf", "--graph", str(bridged_file), "--out", str(out)]) == 0
    assert out.read_text() == "n0\t0\nn1\t0\nn2\t0\nn3\t1\nn4\t1\nn5\t1\n"


def test_centrality_output(bridged_file, capsys):
    assert main(["centrality", "--graph", str(bridged_file)]) == 0
    assert capsys.readouterr().out == "n0\t10\nn1\t10\nn2\t7\nn3\t7\nn4\t10\nn5\t10\n"


def test_centrality_disconnected_is_component_local(tmp_path, capsys):
    path = tmp_path / "g.tsv"
    path.write_text("a\tb\nb\tc\nx\ty\n")
    assert main(["centrality", "--graph", str(path)]) == 0
    assert capsys.readouterr().out == "a\t3\nb\t2\nc\t3\nx\t1\ny\t1\n"


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_generate_detect_score_pipeline(tmp_path, capsys, seed):
    g, t = _generate(tmp_path, seed)
    pred = tmp_path / "pred.tsv"
    assert main(["detect", "--algo", "lf", "--graph", str(g), "--out", str(pred)]) == 0
    capsys.readouterr()
    assert main(["score", "--truth", str(t), "--pred", str(pred)]) == 0
    assert capsys.readouterr().out.startswith("pair_error=0 pred_k=5 true_k=5 ")


def test_score_identity(tmp_path, capsys):
    _, t = _generate(tmp_path)
    assert main(["score", "--truth", str(t), "--pred", str(t)]) == 0
    assert capsys.readouterr().out.startswith("pair_error=0 ")


def test_detect_spectral(bridged_file, tmp_path):
    out = tmp_path / "pred.tsv"
    code = main(["detect", "--algo", "spectral", "--k", "2", "--seed", "0",
                 "--graph", str(bridged_file), "--out", str(out)])
    assert code == 0
    assert out.read_text() == "n0\t0\nn1\t0\nn2\t0\nn3\t1\nn4\t1\nn5\t1\n"


def test_generate_is_byte_deterministic(tmp_path):
    a = _generate(tmp_path / ".", seed=5)
    first = [p.read_bytes() for p in a]
    b = _generate(tmp_path / ".", seed=5)
    assert [p.read_bytes() for p in b] == first


def test_compare_csv(tmp_path, capsys):
    out = tmp_path / "cmp.csv"
    code = main(["compare", "--communities", "4", "--min-size", "2", "--max-size", "8",
                 "--seeds", "1..3", "--inter-edges", "30,10", "--csv-out", str(out)])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert list(rows[0]) == ["seed", "inter_edges", "n", "true_k", "lf_k", "lf_error", "spectral_error"]
    assert [(r["seed"], r["inter_edges"]) for r in rows] == [
        ("1", "10"), ("1", "30"), ("2", "10"), ("2", "30"), ("3", "10"), ("3", "30")]
    assert all(r["lf_error"] == "0" and r["lf_k"] == r["true_k"] == "4" for r in rows)
    assert "mean_spectral_error" in capsys.readouterr().out


def test_compare_parallel_matches_serial(tmp_path):
    args = ["compare", "--communities", "3", "--min-size", "2", "--max-size", "6",
            "--seeds", "1,2", "--inter-edges", "8"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--csv-out", str(a)]) == 0
    assert main(args + ["--csv-out", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["detect", "--algo", "lf"],
    ["detect", "--algo", "kmeans", "--graph", "x", "--out", "y"],
    ["score", "--truth", "a", "--pred", "b", "--extra"],
    ["compare", "--communities", "2", "--min-size", "2", "--max-size", "3",
     "--seeds", "x..y", "--inter-edges", "1", "--csv-out", "o.csv"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err


def test_missing_file_is_usage_error(tmp_path, capsys):
    code = main(["score", "--truth", str(tmp_path / "nope"), "--pred", str(tmp_path / "nope")])
    assert code == 1
    assert "no such file" in capsys.readouterr().err


def test_spectral_needs_k(bridged_file, tmp_path):
    assert main(["detect", "--algo", "spectral", "--graph", str(bridged_file),
                 "--out", str(tmp_path / "o")]) == 1


def test_malformed_graph_is_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("a\tb\nonly-one-field\n")
    code = main(["detect", "--algo", "lf", "--graph", str(bad), "--out", str(tmp_path / "o")])
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_score_node_mismatch_is_data_error(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    a.write_text("x\t0\ny\t0\n")
    b.write_text("x\t0\nz\t0\n")
    assert main(["score", "--truth", str(a), "--pred", str(b)]) == 2


def test_generate_infeasible_is_data_error(tmp_path):
    code = main(["generate", "--communities", "3", "--min-size", "2", "--max-size", "2",
                 "--inter-edges", "99", "--seed", "1",
                 "--graph-out", str(tmp_path / "g"), "--truth-out", str(tmp_path / "t")])
    assert code == 2


def test_module_entry_point(bridged_file):
    proc = subprocess.run([sys.executable, "-m", "leaderfollower", "centrality",
                           "--graph", str(bridged_file)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[2] == "n2\t7"
