#include <doctest.h>

#include <cmath>

#include "pcdpe/geometry.hpp"
#include "pcdpe/rng.hpp"
#include "stat_helpers.hpp"

using namespace pcdpe;
using doctest::Approx;

namespace {
const double kS3 = std::sqrt(3.0);
}

TEST_SUITE("geometry") {

TEST_CASE("barycentric coordinates on the standard triangle") {
  const Triangle te = Triangle::equilateral();
  const Bary center = te.barycentric({0.5, kS3 / 6.0});
  CHECK(center.b1 == Approx(1.0 / 3).epsilon(1e-12));
  CHECK(center.b2 == Approx(1.0 / 3).epsilon(1e-12));
  CHECK(center.b3 == Approx(1.0 / 3).epsilon(1e-12));

  const Bary vtx = te.barycentric({1.0, 0.0});
  CHECK(vtx.b1 == Approx(0.0).epsilon(1e-12));
  CHECK(vtx.b2 == Approx(1.0).epsilon(1e-12));
  CHECK(vtx.b3 == Approx(0.0).epsilon(1e-12));

  // midpoint of the y1-y3 edge
  const Bary mid = te.barycentric({0.25, kS3 / 4.0});
  CHECK(mid.b1 == Approx(0.5).epsilon(1e-12));
  CHECK(mid.b2 == Approx(0.0).epsilon(1e-12));
  CHECK(mid.b3 == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("barycentric round trip reconstructs the point") {
  const Triangle tri({-1.3, 0.4}, {2.0, 0.9}, {0.3, 3.1});
  Philox rng(11, 0);
  for (int i = 0; i < 200; ++i) {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    const Point p = tri.from_barycentric({1.0 - u - v, u, v});
    const Bary b = tri.barycentric(p);
    const Point q = tri.from_barycentric(b);
    CHECK(std::abs(p.x - q.x) < 1e-12);
    CHECK(std::abs(p.y - q.y) < 1e-12);
    CHECK(b.b1 + b.b2 + b.b3 == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("degenerate triangle is rejected") {
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), GeometryError);
}

TEST_CASE("vertex regions") {
  const Triangle te = Triangle::equilateral();
  CHECK(te.vertex_region({0.1, 0.05}) == 0);
  CHECK(te.vertex_region({0.9, 0.05}) == 1);
  CHECK(te.vertex_region({0.5, 0.8}) == 2);
  // center of mass: three-way tie, smallest index wins
  CHECK(te.vertex_region({0.5, kS3 / 6.0}) == 0);
  CHECK_THROWS_AS(te.vertex_region({-1.0, -1.0}), DomainError);
}

TEST_CASE("vertex region is stable under tiny perturbation at a clear max") {
  const Triangle te = Triangle::equilateral();
  const Point p{0.1, 0.05};
  const int region = te.vertex_region(p);
  const Point toward = te.vertex(region);
  const double nx = p.x + 1e-9 * (toward.x - p.x);
  const double ny = p.y + 1e-9 * (toward.y - p.y);
  CHECK(te.vertex_region({nx, ny}) == region);
}

TEST_CASE("proximity region membership") {
  const Triangle te = Triangle::equilateral();
  const Point x{0.5, kS3 / 6.0};

  SUBCASE("x always belongs to its own region for r >= 1") {
    for (double r : {1.0, 1.3, 2.0, 10.0}) {
      CHECK(in_proximity_region(te, ProximityParam::finite(r), x, x));
      CHECK(in_gamma1_region(te, ProximityParam::finite(r), x, x));
    }
  }
  SUBCASE("r = infinity captures the whole triangle") {
    Philox rng(3, 0);
    for (int i = 0; i < 100; ++i) {
      double u = rng.uniform(), v = rng.uniform();
      if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
      }
      const Point z = te.from_barycentric({1.0 - u - v, u, v});
      CHECK(in_proximity_region(te, ProximityParam::infinity(), x, z));
      CHECK(in_gamma1_region(te, ProximityParam::infinity(), x, z));
    }
  }
  SUBCASE("threshold example at r = 1.2") {
    // v(x) = y1 and r (1 - b1(x)) = 0.8; z has 1 - b1(z) ~ 0.8732
    const Point z{0.7, 0.3};
    CHECK_FALSE(in_proximity_region(te, ProximityParam::finite(1.2), x, z));
    CHECK(in_proximity_region(te, ProximityParam::finite(1.4), x, z));
    // definitional reflection
    CHECK_FALSE(in_gamma1_region(te, ProximityParam::finite(1.2), z, x));
  }
}

TEST_CASE("proximity at a support vertex degenerates to the point itself") {
  const Triangle te = Triangle::equilateral();
  const Point vtx{0.0, 0.0};
  CHECK(in_proximity_region(te, ProximityParam::finite(2.0), vtx, vtx));
  CHECK_FALSE(
      in_proximity_region(te, ProximityParam::finite(2.0), vtx, {0.4, 0.2}));
  CHECK_FALSE(
      in_proximity_region(te, ProximityParam::infinity(), vtx, {0.4, 0.2}));
}

TEST_CASE("region nesting in r and gamma reflection") {
  const Triangle tri({0.0, 0.0}, {1.0, 0.0}, {0.5, 0.3});
  Philox rng(17, 0);
  const auto draw = [&] {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    return tri.from_barycentric({1.0 - u - v, u, v});
  };
  const double rs[] = {1.0, 1.1, 1.3, 1.7, 2.0, 3.0, 8.0};
  for (int i = 0; i < 300; ++i) {
    const Point x = draw(), z = draw();
    bool prev = false;
    for (double r : rs) {
      const bool now =
          in_proximity_region(tri, ProximityParam::finite(r), x, z);
      if (prev) CHECK(now);  // monotone in r
      prev = now;
      CHECK(in_gamma1_region(tri, ProximityParam::finite(r), x, z) ==
            in_proximity_region(tri, ProximityParam::finite(r), z, x));
    }
  }
}

TEST_CASE("r = 1 intersection has vanishing probability") {
  const Triangle te = Triangle::equilateral();
  Philox rng(23, 0);
  const auto draw = [&] {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    return te.from_barycentric({1.0 - u - v, u, v});
  };
  const ProximityParam r1 = ProximityParam::finite(1.0);
  int hits = 0;
  const int trials = 1000000;
  for (int i = 0; i < trials; ++i) {
    const Point x = draw(), z = draw();
    if (in_proximity_region(te, r1, x, z) && in_gamma1_region(te, r1, x, z)) {
      ++hits;
    }
  }
  CHECK(hits < trials / 1000);
}

TEST_CASE("standardize maps vertices onto the equilateral triangle") {
  const Triangle te = Triangle::equilateral();
  const auto check_maps_to_te = [&](const Triangle& tri, double tol) {
    const AffineMap map = standardize(tri);
    for (int i = 0; i < 3; ++i) {
      const Point img = map(tri.vertex(i));
      // image must coincide with one of T_e's vertices
      bool matched = false;
      for (int j = 0; j < 3; ++j) {
        const Point v = te.vertex(j);
        if (std::abs(img.x - v.x) < tol && std::abs(img.y - v.y) < tol) {
          matched = true;
        }
      }
      CHECK(matched);
    }
  };
  check_maps_to_te(te, 1e-12);
  check_maps_to_te(Triangle({0, 0}, {1, 0}, {0.5, 0.3}), 1e-10);
  check_maps_to_te(Triangle({2, 1}, {4, 1}, {3, 2}), 1e-10);
  check_maps_to_te(Triangle({-3.2, 0.7}, {1.9, -4.0}, {2.4, 5.5}), 1e-9);
}

TEST_CASE("standardize preserves uniformity (chi-square on 16 cells)") {
  const Triangle tri({0.2, -0.5}, {3.1, 0.2}, {1.0, 2.4});
  const Triangle te = Triangle::equilateral();
  const AffineMap map = standardize(tri);
  Philox rng(31, 0);
  int counts[16] = {0};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    const Point p = map(tri.from_barycentric({1.0 - u - v, u, v}));
    ++counts[testhelp::bary_cell16(te.barycentric(p))];
  }
  CHECK(testhelp::chi_square_uniform(counts, n) < testhelp::kChi2_15_At01);
}

TEST_CASE("simplex predicate in three dimensions") {
  const Simplex tetra({{0.0, 0.0, 0.0},
                       {1.0, 0.0, 0.0},
                       {0.5, kS3 / 2.0, 0.0},
                       {0.5, kS3 / 4.0, kS3 / 2.0}});
  CHECK(tetra.dim() == 3);
  const std::vector<double> x{0.5, 0.3, 0.2};
  REQUIRE(tetra.contains(x));

  SUBCASE("self membership and infinity") {
    CHECK(in_proximity_region(tetra, ProximityParam::finite(1.0), x, x));
    Philox rng(5, 0);
    for (int i = 0; i < 50; ++i) {
      // rejection-sample a point of the tetrahedron
      std::vector<double> z(3);
      while (true) {
        z = {rng.uniform(), rng.uniform() * kS3 / 2.0,
             rng.uniform() * kS3 / 2.0};
        if (tetra.contains(z)) break;
      }
      CHECK(in_proximity_region(tetra, ProximityParam::infinity(), x, z));
    }
  }
  SUBCASE("membership is monotone in r") {
    Philox rng(6, 0);
    for (int i = 0; i < 100; ++i) {
      std::vector<double> z(3);
      while (true) {
        z = {rng.uniform(), rng.uniform() * kS3 / 2.0,
             rng.uniform() * kS3 / 2.0};
        if (tetra.contains(z)) break;
      }
      bool prev = false;
      for (double r : {1.0, 1.2, 1.5, 2.0, 3.0, 6.0, 20.0}) {
        const bool now =
            in_proximity_region(tetra, ProximityParam::finite(r), x, z);
        if (prev) CHECK(now);
        prev = now;
      }
    }
  }
  SUBCASE("degenerate simplex rejected") {
    CHECK_THROWS_AS(Simplex({{0.0, 0.0, 0.0},
                             {1.0, 0.0, 0.0},
                             {2.0, 0.0, 0.0},
                             {3.0, 0.0, 0.0}}),
                    GeometryError);
  }
}

TEST_CASE("proximity parameter validation") {
  CHECK_THROWS_AS(ProximityParam::finite(0.5), DomainError);
  CHECK(ProximityParam::infinity().is_infinite());
  CHECK(ProximityParam::finite(
            std::numeric_limits<double>::infinity()).is_infinite());
}

}  // TEST_SUITE
