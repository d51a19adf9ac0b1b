"""End-to-end tests of the command-line tool."""

import json
import math
import os
import subprocess

import pytest

BIN = os.environ.get("PCDPE_BIN", "pcdpe")


def run(*args, check=True, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [BIN, *args], capture_output=True, text=True, env=env, timeout=600
    )
    if check and proc.returncode != 0:
        raise AssertionError(
            f"command failed ({proc.returncode}): {proc.stderr}\n{proc.stdout}"
        )
    return proc


def run_json(*args):
    proc = run(*args)
    doc = json.loads(proc.stdout)
    assert doc["tool"]["name"] == "pcdpe"
    assert "seed" in doc
    return doc


def test_asym_values():
    doc = run_json("asym", "--stat", "mu", "--mode", "and", "--r", "2")
    assert doc["result"]["value_str"] == "0.458333333333"
    doc = run_json("asym", "--stat", "nu", "--mode", "or", "--r", "1")
    assert doc["result"]["value"] == pytest.approx(1 / 3240, rel=1e-12)
    doc = run_json("asym", "--stat", "pae", "--mode", "or", "--alt", "seg",
                   "--r", "1")
    assert doc["result"]["value"] == pytest.approx(160 / 9, rel=1e-3)


def test_asym_r_tokens():
    for token, value in [("4/3", 4 / 3), ("sqrt2", math.sqrt(2)), ("1.25", 1.25)]:
        doc = run_json("asym", "--stat", "mu", "--mode", "or", "--r", token)
        assert doc["result"]["value"] > 0
        del value
    doc = run_json("asym", "--stat", "mu", "--mode", "or", "--r", "inf")
    assert doc["result"]["value"] == 1.0


def test_gen_density_round_trip(tmp_path):
    out = tmp_path / "pts.tsv"
    doc = run_json("gen", "--n", "40", "--seed", "77", "--out", str(out))
    assert len(doc["result"]["points"]) == 40
    assert out.exists()

    d = run_json("density", "--data", str(out), "--r", "inf")
    assert d["result"]["rho_and"] == 1.0

    d2 = run_json("density", "--data", str(out), "--r", "1.5")
    d3 = run_json("density", "--data", str(out), "--r", "1.5")
    assert d2["result"] == d3["result"]  # bit-reproducible
    assert d2["result"]["rho_and"] + d2["result"]["rho_or"] == pytest.approx(
        2 * d2["result"]["rho_arc"], abs=0
    )


def test_three_point_fixture_has_no_edges(tmp_path):
    pts = tmp_path / "three.tsv"
    pts.write_text("0.05 0.02\n0.5 0.28\n0.9 0.02\n")
    doc = run_json("density", "--data", str(pts), "--r", "1.01")
    assert doc["result"]["rho_and"] == 0.0
    assert doc["result"]["arcs"] == 0


def test_symmetric_pair_at_infinity(tmp_path):
    pts = tmp_path / "pair.tsv"
    pts.write_text("0.31 0.2\n0.52 0.23\n")
    doc = run_json("density", "--data", str(pts), "--r", "inf")
    assert doc["result"]["rho_and"] == 1.0


def test_delaunay_square_and_center(tmp_path):
    m = tmp_path / "markers.tsv"
    m.write_text("0 0\n2 0\n2 2\n0 2\n1 1\n")
    doc = run_json("delaunay", "--markers", str(m))
    assert len(doc["result"]["triangles"]) == 4
    assert doc["result"]["weights"] == pytest.approx([0.25] * 4)


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("0.1 0.2\noops nope\n")
    proc = run("density", "--data", str(bad), "--r", "2", check=False)
    assert proc.returncode == 2
    assert "2" in proc.stderr  # diagnostic carries the line number

    pts = tmp_path / "ok.tsv"
    pts.write_text("0.2 0.1\n0.5 0.3\n0.4 0.2\n")
    proc = run(
        "test", "--data", str(pts), "--r", "1", "--mode", "and",
        "--direction", "seg", check=False,
    )
    assert proc.returncode == 3  # degenerate statistic at (and, r = 1)

    proc = run("density", "--data", str(tmp_path / "missing.tsv"), check=False)
    assert proc.returncode == 2


def test_test_command_asymptotic(tmp_path):
    out = tmp_path / "null.tsv"
    run_json("gen", "--n", "500", "--seed", "5", "--out", str(out))
    doc = run_json(
        "test", "--data", str(out), "--r", "2", "--mode", "and",
        "--direction", "seg", "--alpha", "0.05",
    )
    assert 0.0 <= doc["result"]["p_value"] <= 1.0
    assert doc["result"]["four_nu"] == pytest.approx(4 * 58901 / 1451520, rel=1e-12)


def test_test_command_detects_segregation(tmp_path):
    out = tmp_path / "seg.tsv"
    eps = math.sqrt(3) / 4
    run_json("gen", "--n", "100", "--seed", "6", "--pattern", "seg",
             "--eps", str(eps), "--out", str(out))
    doc = run_json(
        "test", "--data", str(out), "--r", "2", "--mode", "and",
        "--direction", "seg", "--critical", "mc", "--n-mc", "1000",
        "--seed", "6",
    )
    assert doc["result"]["reject"] is True
    assert doc["result"]["p_value"] < 0.01


def test_env_seed_default(tmp_path):
    doc_env = json.loads(
        run("gen", "--n", "3", env_extra={"PCDPE_SEED": "123"}).stdout
    )
    doc_flag = json.loads(run("gen", "--n", "3", "--seed", "123").stdout)
    assert doc_env["result"]["points"] == doc_flag["result"]["points"]
    assert doc_env["seed"] == 123


def test_power_emits_rows_and_plot_data(tmp_path):
    plots = tmp_path / "plots"
    doc = run_json(
        "power", "--r", "1.5,2", "--mode", "and", "--n", "10", "--n-mc",
        "200", "--alts", "seg:0.4330127018922193", "--seed", "9",
        "--emit-plot-data", str(plots),
    )
    rows = doc["result"]["rows"]
    assert len(rows) == 2
    assert rows[1]["beta"][0]["beta_hat"] > 0.9
    assert any(p.suffix == ".tsv" for p in plots.iterdir())


def test_mesh_test_path(tmp_path):
    m = tmp_path / "markers.tsv"
    m.write_text("0 0\n2 0\n2 2\n0 2\n1 1\n")
    out = tmp_path / "mesh_pts.tsv"
    run_json("gen", "--markers", str(m), "--n", "300", "--seed", "4",
             "--out", str(out))
    doc = run_json(
        "test", "--data", str(out), "--markers", str(m), "--r", "2",
        "--mode", "and", "--direction", "seg",
    )
    assert "statistic" in doc["result"]
    assert 0.0 <= doc["result"]["p_value"] <= 1.0
