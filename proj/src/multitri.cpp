#include "pcdpe/multitri.hpp"

#include <cmath>
#include <limits>

namespace pcdpe {

MultiDensity multi_density(std::span<const Point> points,
                           const DelaunayMesh& mesh, ProximityParam r,
                           std::span<const int> triangle_of) {
  const int n = static_cast<int>(points.size());
  if (n < 2) {
    throw DomainError("multi-triangle densities need at least 2 points");
  }
  std::vector<int> owned;
  if (triangle_of.empty()) {
    owned = assign(points, mesh);
    triangle_of = owned;
  } else if (triangle_of.size() != points.size()) {
    throw DomainError("triangle assignment size mismatch");
  }
  const int jm = mesh.triangle_count();
  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(jm));
  for (int t = 0; t < jm; ++t) tris.push_back(mesh.triangle(t));

  const PcDigraph d = PcDigraph::build(points, tris, triangle_of, r);

  MultiDensity md;
  md.n = n;
  md.per_triangle_n.assign(static_cast<std::size_t>(jm), 0);
  for (int i = 0; i < n; ++i) {
    ++md.per_triangle_n[static_cast<std::size_t>(triangle_of[static_cast<std::size_t>(i)])];
  }
  std::vector<std::uint64_t> and_i(static_cast<std::size_t>(jm), 0);
  std::vector<std::uint64_t> or_i(static_cast<std::size_t>(jm), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int ti = triangle_of[static_cast<std::size_t>(i)];
      if (ti != triangle_of[static_cast<std::size_t>(j)]) continue;
      const bool ij = d.arc(i, j);
      const bool ji = d.arc(j, i);
      if (ij && ji) ++and_i[static_cast<std::size_t>(ti)];
      if (ij || ji) ++or_i[static_cast<std::size_t>(ti)];
    }
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  md.per_triangle_rho_and.assign(static_cast<std::size_t>(jm), nan);
  md.per_triangle_rho_or.assign(static_cast<std::size_t>(jm), nan);
  for (int t = 0; t < jm; ++t) {
    const std::uint64_t ni = static_cast<std::uint64_t>(
        md.per_triangle_n[static_cast<std::size_t>(t)]);
    md.edges_and += and_i[static_cast<std::size_t>(t)];
    md.edges_or += or_i[static_cast<std::size_t>(t)];
    md.n_t += ni * (ni - 1) / 2;
    if (ni >= 2) {
      const double pairs2 = static_cast<double>(ni) * (ni - 1);
      md.per_triangle_rho_and[static_cast<std::size_t>(t)] =
          2.0 * static_cast<double>(and_i[static_cast<std::size_t>(t)]) / pairs2;
      md.per_triangle_rho_or[static_cast<std::size_t>(t)] =
          2.0 * static_cast<double>(or_i[static_cast<std::size_t>(t)]) / pairs2;
    }
  }
  if (md.n_t == 0) {
    throw DomainError(
        "every triangle holds at most one point; rho_II is undefined");
  }
  const double pairs2 = static_cast<double>(n) * (n - 1);
  md.rho_I_and = 2.0 * static_cast<double>(md.edges_and) / pairs2;
  md.rho_I_or = 2.0 * static_cast<double>(md.edges_or) / pairs2;
  md.rho_II_and =
      static_cast<double>(md.edges_and) / static_cast<double>(md.n_t);
  md.rho_II_or =
      static_cast<double>(md.edges_or) / static_cast<double>(md.n_t);
  md.xi_hat_and = md.xi_hat_or = 0.0;
  for (int t = 0; t < jm; ++t) {
    const double w = mesh.weight(t);
    const double ra = md.per_triangle_rho_and[static_cast<std::size_t>(t)];
    const double ro = md.per_triangle_rho_or[static_cast<std::size_t>(t)];
    if (!std::isnan(ra)) md.xi_hat_and += w * w * ra;
    if (!std::isnan(ro)) md.xi_hat_or += w * w * ro;
  }
  return md;
}

}  // namespace pcdpe
