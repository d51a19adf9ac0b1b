#include "pcdpe/graph.hpp"

#include <algorithm>
#include <string>

namespace pcdpe {

namespace {

// Barycentric data needed by the predicate, precomputed per point.
struct PredInput {
  Bary b;
  int vreg;
  bool at_vertex;
};

PredInput pred_input(const Triangle& tri, Point p, int index) {
  const Bary b = tri.barycentric(p);
  if (!b.inside()) {
    throw DomainError("point " + std::to_string(index) +
                      " lies outside its support triangle");
  }
  const int v = b.argmax();
  return {b, v, b[v] >= 1.0 - kBaryTol};
}

bool arc_predicate(ProximityParam r, const PredInput& x, const PredInput& z) {
  if (x.at_vertex) return z.b[x.vreg] >= 1.0 - kBaryTol;
  if (r.is_infinite()) return true;
  return (1.0 - z.b[x.vreg]) <= r.value() * (1.0 - x.b[x.vreg]);
}

}  // namespace

PcDigraph PcDigraph::build(std::span<const Point> points, const Triangle& tri,
                           ProximityParam r) {
  std::vector<int> zeros(points.size(), 0);
  return build(points, std::span<const Triangle>(&tri, 1), zeros, r);
}

PcDigraph PcDigraph::build(std::span<const Point> points,
                           std::span<const Triangle> tris,
                           std::span<const int> triangle_of,
                           ProximityParam r) {
  if (triangle_of.size() != points.size()) {
    throw DomainError("triangle assignment size mismatch");
  }
  PcDigraph d;
  d.n_ = static_cast<int>(points.size());
  d.bits_.assign(static_cast<std::size_t>(d.n_) * d.n_, 0);
  d.tri_of_.assign(triangle_of.begin(), triangle_of.end());

  std::vector<PredInput> in;
  in.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    in.push_back(
        pred_input(tris[static_cast<std::size_t>(triangle_of[i])], points[i],
                   static_cast<int>(i)));
  }
  for (int i = 0; i < d.n_; ++i) {
    for (int j = 0; j < d.n_; ++j) {
      if (i == j) continue;
      if (triangle_of[static_cast<std::size_t>(i)] !=
          triangle_of[static_cast<std::size_t>(j)]) {
        continue;  // proximity regions never cross triangles
      }
      if (arc_predicate(r, in[static_cast<std::size_t>(i)],
                        in[static_cast<std::size_t>(j)])) {
        d.bits_[static_cast<std::size_t>(i) * d.n_ + j] = 1;
        ++d.arcs_;
      }
    }
  }
  return d;
}

UnderlyingGraph::UnderlyingGraph(const PcDigraph& d, EdgeMode mode)
    : n_(d.order()), mode_(mode) {
  bits_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const bool ij = d.arc(i, j);
      const bool ji = d.arc(j, i);
      const bool e = mode == EdgeMode::And ? (ij && ji) : (ij || ji);
      if (e) {
        bits_[static_cast<std::size_t>(i) * n_ + j] = 1;
        bits_[static_cast<std::size_t>(j) * n_ + i] = 1;
        ++edges_;
      }
    }
  }
}

DensitySummary densities(const PcDigraph& d) {
  const int n = d.order();
  if (n < 2) {
    throw DomainError("densities are undefined for fewer than 2 vertices");
  }
  DensitySummary s;
  s.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool ij = d.arc(i, j);
      const bool ji = d.arc(j, i);
      s.arcs += static_cast<std::uint64_t>(ij) + static_cast<std::uint64_t>(ji);
      s.edges_and += (ij && ji) ? 1 : 0;
      s.edges_or += (ij || ji) ? 1 : 0;
    }
  }
  const double pairs2 = static_cast<double>(n) * (n - 1);
  s.rho_and = 2.0 * static_cast<double>(s.edges_and) / pairs2;
  s.rho_or = 2.0 * static_cast<double>(s.edges_or) / pairs2;
  // arcs == edges_and + edges_or per pair, so this halving keeps the identity
  // rho_and + rho_or == 2 rho_arc exact in floating point as well.
  s.rho_arc = 0.5 * (s.rho_and + s.rho_or);
  return s;
}

namespace {

// Exact minimum dominating set over closed neighborhood masks, by cardinality.
int domination_over_masks(const std::vector<std::uint32_t>& cover, int n) {
  const std::uint32_t all = n == 32 ? 0xFFFFFFFFu : ((1u << n) - 1u);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
  for (int k = 1; k <= n; ++k) {
    // enumerate k-subsets via combination walking
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint32_t covered = 0;
      for (int i = 0; i < k; ++i) {
        covered |= cover[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      }
      if (covered == all) return k;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  return n;  // unreachable: k = n always covers
}

void check_domination_size(int n) {
  if (n < 1) throw DomainError("domination number needs at least one vertex");
  if (n > kDominationMaxN) {
    throw CapabilityError(
        "exact domination search is capped at " +
        std::to_string(kDominationMaxN) +
        " vertices; use the sampling workflows for larger graphs");
  }
}

}  // namespace

int domination_number(const PcDigraph& d) {
  const int n = d.order();
  check_domination_size(n);
  std::vector<std::uint32_t> cover(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::uint32_t m = 1u << i;
    for (int j = 0; j < n; ++j) {
      if (j != i && d.arc(i, j)) m |= 1u << j;
    }
    cover[static_cast<std::size_t>(i)] = m;
  }
  return domination_over_masks(cover, n);
}

int domination_number(const UnderlyingGraph& g) {
  const int n = g.order();
  check_domination_size(n);
  std::vector<std::uint32_t> cover(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::uint32_t m = 1u << i;
    for (int j = 0; j < n; ++j) {
      if (j != i && g.edge(i, j)) m |= 1u << j;
    }
    cover[static_cast<std::size_t>(i)] = m;
  }
  return domination_over_masks(cover, n);
}

}  // namespace pcdpe
