#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcdpe/closed_form.hpp"
#include "pcdpe/delaunay.hpp"
#include "pcdpe/graph.hpp"

namespace pcdpe {

// Multi-triangle relative edge densities.  rho_I normalizes by n(n-1)/2,
// rho_II by n_t = sum_i n_i (n_i - 1)/2; Xi equals rho_I identically and
// Xi_hat = sum_i w_i^2 rho_[i] is the weight-mixture version.
struct MultiDensity {
  int n = 0;
  std::uint64_t n_t = 0;
  std::uint64_t edges_and = 0;
  std::uint64_t edges_or = 0;
  double rho_I_and = 0.0;
  double rho_I_or = 0.0;
  double rho_II_and = 0.0;  // NaN when n_t == 0
  double rho_II_or = 0.0;
  double xi_hat_and = 0.0;
  double xi_hat_or = 0.0;
  std::vector<int> per_triangle_n;
  std::vector<double> per_triangle_rho_and;  // NaN where n_i < 2
  std::vector<double> per_triangle_rho_or;
};

// Build per-triangle PCDs (arcs never cross triangles) and aggregate the
// density versions.  triangle_of may be empty, in which case points are
// located in the mesh.
MultiDensity multi_density(std::span<const Point> points,
                           const DelaunayMesh& mesh, ProximityParam r,
                           std::span<const int> triangle_of = {});

}  // namespace pcdpe
