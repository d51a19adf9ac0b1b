#include <doctest.h>

#include <cmath>

#include "pcdpe/multitri.hpp"
#include "pcdpe/patterns.hpp"

using namespace pcdpe;
using doctest::Approx;

TEST_SUITE("multitri") {

TEST_CASE("single-triangle mesh reduces to plain densities") {
  const std::vector<Point> markers{{0, 0}, {1, 0}, {0.5, 0.9}};
  const DelaunayMesh mesh = DelaunayMesh::build(markers);
  const auto mp = sample_mesh(mesh, PatternSpec::null(), 40, {71, 0});
  std::vector<Point> pts;
  std::vector<int> owner;
  for (const auto& q : mp) {
    pts.push_back(q.p);
    owner.push_back(q.triangle);
  }
  const MultiDensity md =
      multi_density(pts, mesh, ProximityParam::finite(1.7), owner);
  const DensitySummary s = densities(
      PcDigraph::build(pts, mesh.triangle(0), ProximityParam::finite(1.7)));
  CHECK(md.rho_I_and == s.rho_and);
  CHECK(md.rho_I_or == s.rho_or);
  CHECK(md.rho_II_and == Approx(s.rho_and).epsilon(1e-15));
  CHECK(md.n_t == 40u * 39u / 2);
}

TEST_CASE("points in one of two triangles") {
  const std::vector<Point> markers{{0, 0}, {2, 0}, {2, 2}, {3, 0}};
  const DelaunayMesh mesh = DelaunayMesh::build(markers);
  REQUIRE(mesh.triangle_count() == 2);
  // five points inside triangle 0 only
  const Triangle t0 = mesh.triangle(0);
  const auto pts5 = sample(t0, PatternSpec::null(), 5, {81, 0});
  const MultiDensity md =
      multi_density(pts5, mesh, ProximityParam::finite(2.0));
  CHECK(md.per_triangle_n[0] + md.per_triangle_n[1] == 5);
  const int heavy = md.per_triangle_n[0] == 5 ? 0 : 1;
  REQUIRE(md.per_triangle_n[static_cast<std::size_t>(heavy)] == 5);
  // with n = n_1 = 5 the two normalizations coincide
  CHECK(md.rho_I_and ==
        Approx(md.per_triangle_rho_and[static_cast<std::size_t>(heavy)])
            .epsilon(1e-15));
  CHECK(md.rho_II_and ==
        Approx(md.per_triangle_rho_and[static_cast<std::size_t>(heavy)])
            .epsilon(1e-15));
}

TEST_CASE("identities between the density versions") {
  Philox rng(17, 0);
  std::vector<Point> markers;
  for (int i = 0; i < 10; ++i) markers.push_back({rng.uniform(), rng.uniform()});
  const DelaunayMesh mesh = DelaunayMesh::build(markers);

  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    const auto mp = sample_mesh(mesh, PatternSpec::null(), 60, {500, rep});
    std::vector<Point> pts;
    std::vector<int> owner;
    for (const auto& q : mp) {
      pts.push_back(q.p);
      owner.push_back(q.triangle);
    }
    const MultiDensity md =
        multi_density(pts, mesh, ProximityParam::finite(2.0), owner);

    // Xi (the count-weighted mixture of per-triangle densities) == rho_I
    double xi_and = 0.0;
    std::uint64_t nt_check = 0;
    for (int t = 0; t < mesh.triangle_count(); ++t) {
      const double ni = md.per_triangle_n[static_cast<std::size_t>(t)];
      nt_check += static_cast<std::uint64_t>(ni * (ni - 1) / 2);
      if (ni >= 2) {
        xi_and += ni * (ni - 1) /
                  (static_cast<double>(md.n) * (md.n - 1)) *
                  md.per_triangle_rho_and[static_cast<std::size_t>(t)];
      }
    }
    CHECK(md.n_t == nt_check);
    CHECK(xi_and == Approx(md.rho_I_and).epsilon(1e-13));

    // rho_I = (2 n_t / (n(n-1))) rho_II
    const double factor = 2.0 * static_cast<double>(md.n_t) /
                          (static_cast<double>(md.n) * (md.n - 1));
    CHECK(md.rho_I_and == Approx(factor * md.rho_II_and).epsilon(1e-14));
    CHECK(md.rho_I_or == Approx(factor * md.rho_II_or).epsilon(1e-14));

    // count-level identity is exact
    CHECK(2 * md.edges_and <= 2 * md.n_t);
  }
}

TEST_CASE("no arcs cross triangles") {
  const std::vector<Point> markers{{0, 0}, {2, 0}, {2, 2}, {3, 0}};
  const DelaunayMesh mesh = DelaunayMesh::build(markers);
  const auto mp = sample_mesh(mesh, PatternSpec::null(), 50, {91, 0});
  std::vector<Point> pts;
  std::vector<int> owner;
  std::vector<Triangle> tris;
  for (int t = 0; t < mesh.triangle_count(); ++t) tris.push_back(mesh.triangle(t));
  for (const auto& q : mp) {
    pts.push_back(q.p);
    owner.push_back(q.triangle);
  }
  const PcDigraph d =
      PcDigraph::build(pts, tris, owner, ProximityParam::infinity());
  for (int i = 0; i < d.order(); ++i) {
    for (int j = 0; j < d.order(); ++j) {
      if (i == j) continue;
      if (owner[static_cast<std::size_t>(i)] !=
          owner[static_cast<std::size_t>(j)]) {
        CHECK_FALSE(d.arc(i, j));
      } else {
        CHECK(d.arc(i, j));  // infinity joins everything within a triangle
      }
    }
  }
}

TEST_CASE("jensen inequality for mesh weights") {
  Philox rng(23, 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> markers;
    const int m = 5 + static_cast<int>(rng.below(8));
    for (int i = 0; i < m; ++i) {
      markers.push_back({rng.uniform(), rng.uniform()});
    }
    DelaunayMesh mesh;
    try {
      mesh = DelaunayMesh::build(markers);
    } catch (const GeometryError&) {
      continue;  // rare degenerate draw
    }
    double w2 = 0.0, w3 = 0.0;
    for (double w : mesh.weights()) {
      w2 += w * w;
      w3 += w * w * w;
    }
    CHECK(w3 >= w2 * w2 - 1e-15);
  }
}

TEST_CASE("undefined rho_II is an error") {
  const std::vector<Point> markers{{0, 0}, {2, 0}, {2, 2}, {3, 0}};
  const DelaunayMesh mesh = DelaunayMesh::build(markers);
  // two points in different triangles: every n_i <= 1
  const std::vector<Point> pts{{1.0, 0.5}, {2.3, 0.2}};
  const std::vector<int> owner = assign(pts, mesh);
  if (owner[0] != owner[1]) {
    CHECK_THROWS_AS(
        multi_density(pts, mesh, ProximityParam::finite(2.0), owner),
        DomainError);
  }
}

}  // TEST_SUITE
