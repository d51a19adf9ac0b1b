#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcdpe/closed_form.hpp"
#include "pcdpe/geometry.hpp"

namespace pcdpe {

// Data-random proximity catch digraph: arc i->j iff X_j lies in the
// proportional-edge proximity region of X_i.  The predicate is evaluated once
// per ordered pair at construction; underlying graphs are derived from the
// cached pair table without re-running any geometry.
class PcDigraph {
 public:
  // Single-triangle build; every point must lie in tri.
  static PcDigraph build(std::span<const Point> points, const Triangle& tri,
                         ProximityParam r);

  // Multi-triangle build: arcs only between points sharing a triangle, with
  // the proximity predicate taken in that triangle.  triangle_of[i] selects
  // the support triangle of point i within tris.
  static PcDigraph build(std::span<const Point> points,
                         std::span<const Triangle> tris,
                         std::span<const int> triangle_of, ProximityParam r);

  int order() const { return n_; }
  bool arc(int i, int j) const {
    return bits_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  std::uint64_t arc_count() const { return arcs_; }
  int triangle_of(int i) const { return tri_of_[static_cast<std::size_t>(i)]; }

 private:
  int n_ = 0;
  std::uint64_t arcs_ = 0;
  std::vector<unsigned char> bits_;
  std::vector<int> tri_of_;
};

// Undirected AND / OR underlying graph of a PCD.
class UnderlyingGraph {
 public:
  UnderlyingGraph(const PcDigraph& d, EdgeMode mode);

  int order() const { return n_; }
  EdgeMode mode() const { return mode_; }
  bool edge(int i, int j) const {
    return bits_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  std::uint64_t edge_count() const { return edges_; }

 private:
  int n_ = 0;
  EdgeMode mode_;
  std::uint64_t edges_ = 0;
  std::vector<unsigned char> bits_;
};

// Relative arc and edge densities.  Counts are exact integers; densities are
// each produced by a single final division so that
// rho_and + rho_or == 2 * rho_arc holds exactly.
struct DensitySummary {
  int n = 0;
  std::uint64_t arcs = 0;
  std::uint64_t edges_and = 0;
  std::uint64_t edges_or = 0;
  double rho_arc = 0.0;
  double rho_and = 0.0;
  double rho_or = 0.0;
};

DensitySummary densities(const PcDigraph& d);

// Exact minimum dominating-set size by subset enumeration in increasing
// cardinality.  For digraphs a vertex dominates its out-neighborhood.
// Capped at kDominationMaxN vertices.
inline constexpr int kDominationMaxN = 16;
int domination_number(const PcDigraph& d);
int domination_number(const UnderlyingGraph& g);

}  // namespace pcdpe
