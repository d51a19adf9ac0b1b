#include <doctest.h>

#include <cmath>
#include <vector>

#include "graph_oracles.hpp"
#include "pcdpe/graph.hpp"
#include "pcdpe/patterns.hpp"
#include "stat_helpers.hpp"

using namespace pcdpe;
using testhelp::domination_oracle;

TEST_SUITE("graph") {

TEST_CASE("single point yields an empty digraph") {
  const Triangle te = Triangle::equilateral();
  const std::vector<Point> pts{{0.4, 0.2}};
  const PcDigraph d = PcDigraph::build(pts, te, ProximityParam::finite(2.0));
  CHECK(d.order() == 1);
  CHECK(d.arc_count() == 0);
  CHECK_THROWS_AS(densities(d), DomainError);
}

TEST_CASE("r = infinity gives the complete digraph") {
  const Triangle te = Triangle::equilateral();
  const auto pts = sample(te, PatternSpec::null(), 12, {5, 0});
  const PcDigraph d = PcDigraph::build(pts, te, ProximityParam::infinity());
  CHECK(d.arc_count() == 12u * 11u);
  const DensitySummary s = densities(d);
  CHECK(s.rho_arc == 1.0);
  CHECK(s.rho_and == 1.0);
  CHECK(s.rho_or == 1.0);
  CHECK(domination_number(d) == 1);
}

TEST_CASE("arcs at r barely above 1 match the predicate oracle") {
  const Triangle te = Triangle::equilateral();
  const ProximityParam r = ProximityParam::finite(1.01);
  const auto oracle_count = [&](const std::vector<Point>& pts) {
    const PcDigraph d = PcDigraph::build(pts, te, r);
    std::uint64_t expect = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        const bool inregion = in_proximity_region(te, r, pts[i], pts[j]);
        CHECK(d.arc(static_cast<int>(i), static_cast<int>(j)) == inregion);
        expect += inregion ? 1 : 0;
      }
    }
    CHECK(expect == d.arc_count());
    return expect;
  };
  // one point deep in each corner: no arcs at all
  CHECK(oracle_count({{0.05, 0.02}, {0.5, 0.8}, {0.9, 0.02}}) == 0);
  // a center point sits on a region boundary, where its proximity triangle
  // is large enough to catch a corner point even at r close to 1
  CHECK(oracle_count({{0.05, 0.02}, {0.5, 0.28}, {0.9, 0.02}}) == 1);
}

TEST_CASE("arc table matches the predicate oracle on random input") {
  const Triangle tri({0.1, -0.2}, {2.2, 0.1}, {1.0, 1.7});
  const auto pts = sample(tri, PatternSpec::null(), 20, {77, 0});
  const ProximityParam r = ProximityParam::finite(1.6);
  const PcDigraph d = PcDigraph::build(pts, tri, r);
  std::uint64_t count = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      if (i == j) continue;
      CHECK(d.arc(i, j) == in_proximity_region(tri, r, pts[i], pts[j]));
      count += d.arc(i, j) ? 1 : 0;
    }
  }
  CHECK(count == d.arc_count());
}

TEST_CASE("point outside the triangle names the offending index") {
  const Triangle te = Triangle::equilateral();
  const std::vector<Point> pts{{0.4, 0.2}, {1.5, 1.5}};
  try {
    PcDigraph::build(pts, te, ProximityParam::finite(2.0));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("underlying graph modes") {
  const Triangle te = Triangle::equilateral();
  SUBCASE("single asymmetric arc") {
    // x deep in vertex region 0, z near the center: at a moderate r the
    // center point reaches x but not conversely
    const std::vector<Point> pts{{0.08, 0.04}, {0.5, 0.28}};
    for (double r = 1.05; r < 4.0; r += 0.05) {
      const PcDigraph d =
          PcDigraph::build(pts, te, ProximityParam::finite(r));
      if (d.arc_count() == 1) {
        const UnderlyingGraph ga(d, EdgeMode::And);
        const UnderlyingGraph go(d, EdgeMode::Or);
        CHECK(ga.edge_count() == 0);
        CHECK(go.edge_count() == 1);
        const DensitySummary s = densities(d);
        CHECK(s.rho_arc == 0.5);
        CHECK(s.rho_and == 0.0);
        CHECK(s.rho_or == 1.0);
        return;
      }
    }
    FAIL("no r produced a single asymmetric arc");
  }
  SUBCASE("AND edges are a subset of OR edges; counts add up") {
    const auto pts = sample(te, PatternSpec::null(), 20, {99, 0});
    const PcDigraph d = PcDigraph::build(pts, te, ProximityParam::finite(1.4));
    const UnderlyingGraph ga(d, EdgeMode::And);
    const UnderlyingGraph go(d, EdgeMode::Or);
    std::uint64_t arcs_by_pair = 0;
    for (int i = 0; i < 20; ++i) {
      for (int j = i + 1; j < 20; ++j) {
        if (ga.edge(i, j)) CHECK(go.edge(i, j));
        arcs_by_pair += static_cast<std::uint64_t>(d.arc(i, j)) +
                        static_cast<std::uint64_t>(d.arc(j, i));
      }
    }
    CHECK(ga.edge_count() + go.edge_count() == arcs_by_pair);
    CHECK(arcs_by_pair == d.arc_count());
  }
}

TEST_CASE("density identity is exact") {
  const Triangle te = Triangle::equilateral();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = sample(te, PatternSpec::null(), 15, {seed, 3});
    for (double r : {1.0, 1.2, 1.5, 2.0, 5.0}) {
      const DensitySummary s =
          densities(PcDigraph::build(pts, te, ProximityParam::finite(r)));
      CHECK(s.rho_and + s.rho_or == 2.0 * s.rho_arc);  // exact by construction
      CHECK(s.arcs == s.edges_and + s.edges_or);
      CHECK(s.rho_and >= 0.0);
      CHECK(s.rho_and <= s.rho_arc);
      CHECK(s.rho_arc <= s.rho_or);
      CHECK(s.rho_or <= 1.0);
    }
  }
}

TEST_CASE("r = 1 has no AND edges") {
  const Triangle te = Triangle::equilateral();
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const auto pts = sample(te, PatternSpec::null(), 25, {seed, 0});
    const DensitySummary s =
        densities(PcDigraph::build(pts, te, ProximityParam::finite(1.0)));
    CHECK(s.rho_and == 0.0);
  }
}

TEST_CASE("domination number basics") {
  const Triangle te = Triangle::equilateral();
  SUBCASE("n = 1") {
    const std::vector<Point> pts{{0.4, 0.2}};
    CHECK(domination_number(PcDigraph::build(pts, te,
                                             ProximityParam::finite(2.0))) == 1);
  }
  SUBCASE("capability bound") {
    const auto pts = sample(te, PatternSpec::null(), 17, {1, 0});
    const PcDigraph d = PcDigraph::build(pts, te, ProximityParam::finite(2.0));
    CHECK_THROWS_AS(domination_number(d), CapabilityError);
  }
  SUBCASE("oracle agreement and mode ordering") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto pts = sample(te, PatternSpec::null(), 8, {seed, 1});
      const PcDigraph d =
          PcDigraph::build(pts, te, ProximityParam::finite(1.5));
      const UnderlyingGraph ga(d, EdgeMode::And);
      const UnderlyingGraph go(d, EdgeMode::Or);
      const int gd = domination_number(d);
      const int gand = domination_number(ga);
      const int gor = domination_number(go);
      CHECK(gd == domination_oracle(d));
      CHECK(gand == domination_oracle(ga));
      CHECK(gor == domination_oracle(go));
      CHECK(gor <= gd);
      CHECK(gd <= gand);
      CHECK(gd <= 3);
      CHECK(gor <= 3);
    }
  }
}

}  // TEST_SUITE
