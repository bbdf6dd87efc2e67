import json
import os
import subprocess
import sys

import numpy as np
import pytest

from altergraph import load_edge_list
from altergraph.cli import main
from altergraph.experiments import read_csv


@pytest.fixture
def path3_file(tmp_path):
    p = tmp_path / "path3.txt"
    p.write_text("0 1\n1 2\n")
    return str(p)


@pytest.fixture
def star4_file(tmp_path):
    p = tmp_path / "star4.txt"
    p.write_text("0 1\n0 2\n0 3\n")
    return str(p)


@pytest.fixture
def dicycle_file(tmp_path):
    p = tmp_path / "dicycle.txt"
    p.write_text("0 1\n1 2\n2 0\n")
    return str(p)


def _cells(path):
    schema, rows = read_csv(path)
    return schema, rows


def test_stats_command(path3_file, tmp_path):
    out = str(tmp_path / "stats.csv")
    assert main(["stats", "--input", path3_file, "--out", out]) == 0
    schema, rows = _cells(out)
    assert schema == ["name", "directed", "N", "E", "mean", "median", "std",
                      "assortativity", "avg_clustering"]
    row = dict(zip(schema, rows[0]))
    assert row["name"] == "path3"
    assert row["N"] == "3" and row["E"] == "2"
    assert float(row["mean"]) == pytest.approx(4 / 3)
    assert float(row["assortativity"]) == pytest.approx(-1.0)


def test_stats_directed(dicycle_file, tmp_path):
    out = str(tmp_path / "stats.csv")
    assert main(["stats", "--input", dicycle_file, "--directed",
                 "--out", out]) == 0
    schema, rows = _cells(out)
    row = dict(zip(schema, rows[0]))
    assert float(row["mean"]) == 1.0
    assert row["assortativity"] == "" and row["avg_clustering"] == ""


def test_gain_command(star4_file, tmp_path):
    out = str(tmp_path / "gain.csv")
    assert main(["gain", "--input", star4_file, "--out", out]) == 0
    schema, rows = _cells(out)
    assert schema == ["node", "degree", "percentile_rank", "gain_mean",
                      "gain_median"]
    table = {r[0]: r for r in rows}
    assert float(table["0"][3]) == pytest.approx(1 / 3)
    assert float(table["1"][3]) == pytest.approx(3.0)
    assert float(table["0"][2]) == 87.5


def test_generate_deterministic_and_loadable(tmp_path):
    a = str(tmp_path / "a.txt")
    b = str(tmp_path / "b.txt")
    args = ["generate", "--model", "sw", "--n", "30", "--b", "2",
            "--p", "0.1", "--seed", "5"]
    assert main(args + ["--out", a]) == 0
    assert main(args + ["--out", b]) == 0
    assert open(a).read() == open(b).read()
    g = load_edge_list(a)
    assert g.node_count == 30
    assert (g.degrees() >= 4).all()


def test_generate_missing_params_usage_error(tmp_path):
    rc = main(["generate", "--model", "hk", "--n", "30",
               "--out", str(tmp_path / "x.txt")])
    assert rc == 1


def test_estimate_command(tmp_path):
    ring = str(tmp_path / "ring.txt")
    main(["generate", "--model", "sw", "--n", "100", "--b", "3",
          "--p", "0", "--seed", "1", "--out", ring])
    out = str(tmp_path / "est.csv")
    assert main(["estimate", "--input", ring, "--fraction", "0.2",
                 "--trials", "3", "--seed", "9", "--out", out]) == 0
    schema, rows = _cells(out)
    assert schema == ["trial", "size", "fraction", "r_used", "g_hat",
                      "g_true", "ratio", "g_emp", "ratio_emp"]
    assert len(rows) == 3
    for r in rows:
        assert float(r[6]) == pytest.approx(1.0, rel=1e-12)  # regular ring


def test_reproduce_fig1_directed_cycle(dicycle_file, tmp_path):
    out = str(tmp_path / "out")
    assert main(["reproduce", "--figure", "fig1", "--input", dicycle_file,
                 "--bins", "10", "--out", out]) == 0
    schema, rows = _cells(os.path.join(out, "fig1_dicycle_mean.csv"))
    assert schema == ["bin_low", "bin_high", "value", "count"]
    occupied = [r for r in rows if r[3] != "0"]
    assert occupied and all(float(r[2]) == 0.0 for r in occupied)
    empties = [r for r in rows if r[3] == "0"]
    assert all(r[2] == "" for r in empties)


def test_reproduce_fig4_star(star4_file, tmp_path):
    out = str(tmp_path / "out")
    assert main(["reproduce", "--figure", "fig4", "--input", star4_file,
                 "--bins", "10", "--out", out]) == 0
    _, rows = _cells(os.path.join(out, "fig4_star4_mean.csv"))
    values = {i: float(r[2]) for i, r in enumerate(rows) if r[2] != ""}
    assert values[3] == pytest.approx(3.0)
    assert values[8] == pytest.approx(1 / 3)


def test_reproduce_fig3_star(star4_file, tmp_path):
    out = str(tmp_path / "out")
    assert main(["reproduce", "--figure", "fig3", "--input", star4_file,
                 "--out", out]) == 0
    schema, rows = _cells(os.path.join(out, "fig3_star4_mean.csv"))
    counts = [int(r[3]) for r in rows]
    assert sum(counts) == 4  # hub + 3 leaves, nothing lost


def test_reproduce_table(path3_file, tmp_path):
    out = str(tmp_path / "out")
    assert main(["reproduce", "--figure", "table", "--input", path3_file,
                 "--out", out]) == 0
    schema, rows = _cells(os.path.join(out, "table.csv"))
    assert rows[0][2] == "3"


def test_reproduce_fig5_deterministic(tmp_path):
    out1 = str(tmp_path / "o1")
    out2 = str(tmp_path / "o2")
    args = ["reproduce", "--figure", "fig5", "--model", "sw",
            "--sizes", "300,500", "--trials", "4", "--seed", "7"]
    assert main(args + ["--out", out1]) == 0
    assert main(args + ["--out", out2, "--threads", "2"]) == 0
    body1 = open(os.path.join(out1, "fig5_sw.csv")).read()
    body2 = open(os.path.join(out2, "fig5_sw.csv")).read()
    assert body1 == body2
    assert len(body1.splitlines()) == 1 + 8


def test_reproduce_manifest_rerun(tmp_path):
    out1 = str(tmp_path / "o1")
    out2 = str(tmp_path / "o2")
    assert main(["reproduce", "--figure", "fig5", "--model", "pa",
                 "--sizes", "200", "--trials", "2", "--seed", "3",
                 "--out", out1]) == 0
    manifest = os.path.join(out1, "manifest.json")
    meta = json.load(open(manifest))
    assert meta["seed"] == 3 and meta["model"] == "pa"
    assert main(["reproduce", "--manifest", manifest, "--out", out2]) == 0
    assert (open(os.path.join(out1, "fig5_pa.csv")).read()
            == open(os.path.join(out2, "fig5_pa.csv")).read())


def test_exit_codes(tmp_path):
    assert main(["stats", "--input", str(tmp_path / "nope.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 2\n")
    assert main(["stats", "--input", str(bad)]) == 2
    assert main(["reproduce", "--figure", "fig9"]) == 1
    assert main(["reproduce"]) == 1
    assert main(["frobnicate"]) == 1


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "altergraph.cli", "generate", "--model", "pa",
         "--n", "10", "--m", "2", "--seed", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("# altergraph N=10 E=17 directed=false")


def test_reproduce_cleans_partial_outputs(tmp_path, path3_file):
    out = str(tmp_path / "out")
    missing = str(tmp_path / "missing.txt")
    rc = main(["reproduce", "--figure", "fig2",
               "--input", path3_file, missing, "--out", out])
    assert rc == 2
    assert not os.path.exists(os.path.join(out, "fig2_path3_mean.csv"))
