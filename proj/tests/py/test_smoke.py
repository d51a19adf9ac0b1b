"""Smoke tests for the python extension."""

import math

import pytest

pcdpe = pytest.importorskip("pcdpe")


def test_closed_form_values():
    assert pcdpe.mu_null("and", 2.0) == pytest.approx(11 / 24, rel=1e-12)
    assert pcdpe.mu_null("or", 1.0) == pytest.approx(37 / 108, rel=1e-12)
    assert pcdpe.nu_null("or", 1.0) == pytest.approx(1 / 3240, rel=1e-12)
    assert pcdpe.mu_null("and", math.inf) == 1.0
    p00, p01, p10, p11 = pcdpe.joint_pmf("and", 2.0)
    assert p00 + p01 + p10 + p11 == pytest.approx(1.0, abs=1e-12)
    assert pcdpe.pae("and", "seg", 1.0) == pytest.approx(4000 / 17, rel=1e-3)


def test_geometry_predicates():
    t = pcdpe.Triangle.equilateral()
    assert t.vertex_region((0.1, 0.05)) == 0
    assert t.contains((0.5, 0.2))
    assert not t.contains((2.0, 2.0))
    x = (0.5, math.sqrt(3) / 6)
    assert pcdpe.in_proximity_region(t, 1.0, x, x)
    assert pcdpe.in_proximity_region(t, math.inf, x, (0.9, 0.05))
    b = t.barycentric(x)
    assert sum(b) == pytest.approx(1.0, abs=1e-12)


def test_sampling_and_densities():
    t = pcdpe.Triangle.equilateral()
    pts = pcdpe.sample(t, "null", 0.0, 200, seed=3)
    assert len(pts) == 200
    assert pts == pcdpe.sample(t, "null", 0.0, 200, seed=3)
    d = pcdpe.densities(pts, t, 2.0)
    assert d["rho_and"] + d["rho_or"] == pytest.approx(2 * d["rho_arc"], abs=0)
    d1 = pcdpe.densities(pts, t, 1.0)
    assert d1["rho_and"] == 0.0
    dinf = pcdpe.densities(pts, t, math.inf)
    assert dinf["rho_or"] == 1.0


def test_segregation_support():
    t = pcdpe.Triangle.equilateral()
    eps = math.sqrt(3) / 8
    pts = pcdpe.sample(t, "seg", eps, 500, seed=9)
    cap = 1 - 2 * eps / math.sqrt(3)
    assert all(max(t.barycentric(p)) <= cap + 1e-12 for p in pts)


def test_mesh_and_multi_density():
    mesh = pcdpe.DelaunayMesh.build([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    assert mesh.triangle_count == 4
    assert mesh.weights == pytest.approx([0.25] * 4)
    pts = [p[:2] for p in pcdpe.sample_mesh(mesh, "null", 0.0, 100, seed=5)]
    md = pcdpe.multi_density(pts, mesh, 2.0)
    factor = 2 * md["n_t"] / (100 * 99)
    assert md["rho_I_and"] == pytest.approx(factor * md["rho_II_and"], rel=1e-12)


def test_inference_path():
    stat = pcdpe.standardized_stat(0.55, 11 / 24, 58901 / 362880, 100)
    assert stat == pytest.approx(2.2752, abs=2e-4)
    outcome = pcdpe.normal_test(stat, "seg", 0.05)
    assert outcome["reject"]
    with pytest.raises(ArithmeticError):
        pcdpe.standardized_stat(0.5, 0.5, 0.0, 100)


def test_power_table_runs():
    rows = pcdpe.empirical_power(
        pcdpe.Triangle.equilateral(),
        [2.0],
        "and",
        10,
        200,
        [("seg", math.sqrt(3) / 4)],
        seed=11,
    )
    assert len(rows) == 1
    assert rows[0]["beta_hat"][0] > 0.9


def test_domination():
    t = pcdpe.Triangle.equilateral()
    pts = pcdpe.sample(t, "null", 0.0, 8, seed=2)
    g_or = pcdpe.domination_number(pts, t, 1.5, "or")
    g_di = pcdpe.domination_number(pts, t, 1.5, "digraph")
    g_and = pcdpe.domination_number(pts, t, 1.5, "and")
    assert g_or <= g_di <= g_and
    assert g_di <= 3
