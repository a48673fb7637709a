"""End-to-end command-line behavior: artifacts, manifests, exit codes."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from prtail.cli import main
from prtail.graph import load_edge_list
from prtail.samples import load_samples

STAR = "1 0\n2 0\n3 0\n0 1\n"


def read_manifest(out_dir):
    with open(os.path.join(out_dir, "manifest.json")) as fh:
        return json.load(fh)


def dir_bytes(out_dir):
    return {
        name: open(os.path.join(out_dir, name), "rb").read() for name in os.listdir(out_dir)
    }


def test_pagerank_command_smoke(tmp_path):
    graph = tmp_path / "star.txt"
    graph.write_text(STAR)
    out = tmp_path / "out"
    rc = main(["pagerank", str(graph), "--c", "0.85", "--out", str(out)])
    assert rc == 0
    manifest = read_manifest(out)
    assert manifest["command"] == "pagerank"
    assert manifest["parameters"]["c"] == 0.85
    assert sorted(os.listdir(out)) == manifest["outputs"]
    lines = (out / "pagerank.txt").read_text().splitlines()
    assert lines[0] == "# c: 0.85"
    values = {int(l.split()[0]): float(l.split()[1]) for l in lines[4:]}
    assert values[0] > values[1] > values[2] == values[3]


def test_pagerank_uniform_graph_skips_degenerate_fit(tmp_path):
    graph = tmp_path / "cycle.txt"
    graph.write_text("0 1\n1 0\n")
    out = tmp_path / "out"
    rc = main(["pagerank", str(graph), "--c", "0.85", "--out", str(out)])
    assert rc == 0
    assert not (out / "pagerank_tail_fit.json").exists()
    assert (out / "pagerank_ccdf.csv").exists()
    assert "pagerank_tail_fit.json" not in read_manifest(out)["outputs"]


def test_pagerank_missing_file_is_io_error(tmp_path):
    rc = main(["pagerank", str(tmp_path / "nope.txt"), "--c", "0.5", "--out", str(tmp_path / "o")])
    assert rc == 3


def test_pagerank_malformed_graph_is_parse_error(tmp_path):
    graph = tmp_path / "bad.txt"
    graph.write_text("0 1\n2\n")
    rc = main(["pagerank", str(graph), "--c", "0.5", "--out", str(tmp_path / "o")])
    assert rc == 3


def test_pagerank_bad_damping_is_parameter_error(tmp_path):
    graph = tmp_path / "star.txt"
    graph.write_text(STAR)
    rc = main(["pagerank", str(graph), "--c", "1.5", "--out", str(tmp_path / "o")])
    assert rc == 2


def test_pagerank_non_convergence_exit_code(tmp_path, capsys):
    graph = tmp_path / "star.txt"
    graph.write_text(STAR)
    out = tmp_path / "out"
    rc = main(["pagerank", str(graph), "--c", "0.99", "--tol", "1e-300", "--out", str(out)])
    assert rc == 4
    assert "without reaching tolerance" in capsys.readouterr().err
    # artifacts are still written for inspection
    assert (out / "pagerank.txt").exists()


def test_model_command_artifacts_and_offset(tmp_path):
    out = tmp_path / "out"
    rc = main(
        ["model", "--c", "0.5", "--pool", "2000", "--generations", "3", "--seed", "1",
         "--out", str(out)]
    )
    assert rc == 0
    offset = json.loads((out / "offset.json").read_text())
    assert offset["c"] == 0.5
    assert offset["difference"] == pytest.approx(
        offset["observed_offset"] - offset["predicted_log10_y"]
    )
    r_samples = load_samples(out / "r_samples.txt")
    assert r_samples.size == 2000
    assert r_samples.values.min() >= 0.5
    n_samples = load_samples(out / "n_samples.txt")
    assert np.issubdtype(n_samples.values.dtype, np.integer)
    diag = (out / "diagnostics.csv").read_text().splitlines()
    assert diag[0].startswith("generation,mean,ks,max")
    assert len(diag) == 4


def test_model_is_byte_reproducible(tmp_path):
    args = ["model", "--c", "0.9", "--pool", "1500", "--generations", "2", "--seed", "7"]
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert main(args + ["--out", str(out_a)]) == 0
    assert main(args + ["--out", str(out_b)]) == 0
    assert dir_bytes(out_a) == dir_bytes(out_b)


def test_model_different_seed_changes_samples(tmp_path):
    base = ["model", "--c", "0.5", "--pool", "2000", "--generations", "3"]
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert main(base + ["--seed", "1", "--out", str(out_a)]) == 0
    assert main(base + ["--seed", "2", "--out", str(out_b)]) == 0
    assert (out_a / "r_samples.txt").read_bytes() != (out_b / "r_samples.txt").read_bytes()


def test_model_ks_warning_still_succeeds(tmp_path, capsys):
    rc = main(
        ["model", "--c", "0.9", "--pool", "1000", "--generations", "1", "--seed", "0",
         "--out", str(tmp_path / "o")]
    )
    assert rc == 0
    assert "KS distance" in capsys.readouterr().err


def test_model_tiny_damping_degenerate_run(tmp_path, capsys):
    out = tmp_path / "out"
    rc = main(
        ["model", "--c", "1e-6", "--pool", "1000", "--generations", "2", "--seed", "0",
         "--out", str(out)]
    )
    assert rc == 0
    values = load_samples(out / "r_samples.txt").values
    assert np.all(np.abs(values - 1.0) < 1e-3)
    # R is a point mass near 1, so no tail band is shared with N(T)
    offset = json.loads((out / "offset.json").read_text())
    assert offset["observed_offset"] is None
    assert offset["difference"] is None
    assert np.isfinite(offset["predicted_log10_y"])
    assert "offset unavailable" in capsys.readouterr().err


def test_model_invalid_alpha_is_parameter_error(tmp_path):
    rc = main(
        ["model", "--c", "0.5", "--alpha", "1.0", "--pool", "1000", "--generations", "1",
         "--out", str(tmp_path / "o")]
    )
    assert rc == 2


def test_generate_gn_command(tmp_path):
    out = tmp_path / "out"
    rc = main(
        ["generate-gn", "--beta", "0.2", "--d", "3", "--n", "200", "--seed", "5",
         "--out", str(out)]
    )
    assert rc == 0
    g = load_edge_list(out / "edges.txt", keep_duplicates=True)
    assert g.n == 200
    assert np.all(g.out_degree == 3)
    manifest = read_manifest(out)
    assert manifest["parameters"]["beta"] == 0.2


def test_generate_gn_rejects_small_n(tmp_path):
    rc = main(
        ["generate-gn", "--beta", "0.2", "--d", "8", "--n", "8", "--out", str(tmp_path / "o")]
    )
    assert rc == 2


def test_compare_command_table(tmp_path):
    out = tmp_path / "out"
    rc = main(
        ["compare", "--c", "0.5,0.9", "--pool", "2000", "--generations", "3", "--seed", "3",
         "--out", str(out)]
    )
    assert rc == 0
    lines = (out / "compare.csv").read_text().splitlines()
    assert lines[0] == "c,predicted_log10_y,observed_offset,difference"
    assert len(lines) == 3
    row = lines[1].split(",")
    assert float(row[0]) == 0.5
    assert np.isfinite(float(row[2]))
    assert float(row[3]) == pytest.approx(float(row[2]) - float(row[1]), abs=1e-12)


def test_compare_near_boundary_damping_completes(tmp_path):
    out = tmp_path / "out"
    rc = main(
        ["compare", "--c", "0.99", "--pool", "1000", "--generations", "2", "--seed", "0",
         "--out", str(out)]
    )
    assert rc == 0
    row = (out / "compare.csv").read_text().splitlines()[1].split(",")
    assert np.isfinite(float(row[1]))


def test_compare_empty_grid_is_parameter_error(tmp_path):
    rc = main(["compare", "--c", " , ", "--pool", "1000", "--out", str(tmp_path / "o")])
    assert rc == 2


def test_manifest_versions_block(tmp_path):
    out = tmp_path / "out"
    main(
        ["generate-gn", "--beta", "1.0", "--d", "1", "--n", "3", "--seed", "0", "--out", str(out)]
    )
    manifest = read_manifest(out)
    import prtail

    assert manifest["versions"]["prtail"] == prtail.__version__
    assert set(manifest["versions"]) == {"prtail", "python", "numpy", "scipy", "numba"}


def test_console_entry_point_runs(tmp_path):
    out = tmp_path / "out"
    proc = subprocess.run(
        [sys.executable, "-m", "prtail", "model", "--c", "0.5", "--pool", "1000",
         "--generations", "2", "--seed", "1", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (out / "manifest.json").exists()
