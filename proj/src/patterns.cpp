#include "pcdpe/patterns.hpp"

#include <cmath>

#include "pcdpe/delaunay.hpp"

namespace pcdpe {

namespace {
const double kSqrt3 = std::sqrt(3.0);
constexpr double kMinAcceptance = 1e-6;

Point draw_uniform(const Triangle& tri, Philox& rng) {
  double u = rng.uniform();
  double v = rng.uniform();
  if (u + v > 1.0) {  // fold across the diagonal of the parameter square
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return tri.from_barycentric({1.0 - u - v, u, v});
}

Point draw_pattern(const Triangle& tri, const PatternSpec& spec, Philox& rng) {
  while (true) {
    const Point p = draw_uniform(tri, rng);
    if (pattern_accepts(tri, spec, p)) return p;
  }
}

void check_acceptance(const PatternSpec& spec) {
  if (spec.acceptance_probability() < kMinAcceptance) {
    throw SamplingError("rejection sampler acceptance probability below 1e-6");
  }
}

}  // namespace

bool pattern_accepts(const Triangle& tri, const PatternSpec& spec, Point p) {
  switch (spec.kind) {
    case PatternSpec::Kind::Null:
      return true;
    case PatternSpec::Kind::Segregation:
      return tri.barycentric(p).max() <= 1.0 - 2.0 * spec.eps / kSqrt3;
    case PatternSpec::Kind::Association:
      return tri.barycentric(p).max() >= 1.0 / 3.0 + 2.0 * spec.eps / kSqrt3;
  }
  return true;
}

// eps = 0 is allowed and reproduces the null distribution exactly.
PatternSpec PatternSpec::segregation(double eps) {
  if (!(eps >= 0.0 && eps < kSqrt3 / 3.0)) {
    throw DomainError("segregation epsilon must lie in [0, sqrt(3)/3)");
  }
  return {Kind::Segregation, eps};
}

PatternSpec PatternSpec::association(double eps) {
  if (!(eps >= 0.0 && eps < kSqrt3 / 3.0)) {
    throw DomainError("association epsilon must lie in [0, sqrt(3)/3)");
  }
  return {Kind::Association, eps};
}

double PatternSpec::acceptance_probability() const {
  switch (kind) {
    case Kind::Null:
      return 1.0;
    case Kind::Segregation:
      return eps == 0.0 ? 1.0 : 1.0 - delta_from_epsilon(eps);
    case Kind::Association: {
      // Union of the three corner triangles b_y >= t with t = 1/3 + 2e/sqrt3;
      // pairwise overlaps are triangles of scale (1 - 2t), no triple overlap.
      const double t = 1.0 / 3.0 + 2.0 * eps / kSqrt3;
      const double s = 1.0 - t;
      const double pair = t < 0.5 ? (1.0 - 2.0 * t) : 0.0;
      return 3.0 * s * s - 3.0 * pair * pair;
    }
  }
  return 1.0;
}

std::vector<Point> sample(const Triangle& tri, const PatternSpec& spec, int n,
                          RngSeed seed) {
  if (n < 0) throw DomainError("sample count must be non-negative");
  check_acceptance(spec);
  Philox rng(seed);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(draw_pattern(tri, spec, rng));
  return out;
}

double delta_from_epsilon(double eps) {
  if (!(eps > 0.0 && eps < kSqrt3 / 3.0)) {
    throw DomainError("epsilon must lie in (0, sqrt(3)/3)");
  }
  if (eps <= kSqrt3 / 4.0) return 4.0 * eps * eps;
  const double u = 1.0 - kSqrt3 * eps;
  return 1.0 - 4.0 * u * u;
}

double epsilon_from_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  if (delta <= 0.75) return std::sqrt(delta) / 2.0;
  return (1.0 - std::sqrt(1.0 - delta) / 2.0) / kSqrt3;
}

std::vector<MeshPoint> sample_mesh(const DelaunayMesh& mesh,
                                   const PatternSpec& spec, int n,
                                   RngSeed seed) {
  if (n < 0) throw DomainError("sample count must be non-negative");
  check_acceptance(spec);
  const int jm = mesh.triangle_count();
  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(jm));
  std::vector<double> cum(static_cast<std::size_t>(jm));
  double acc = 0.0;
  for (int t = 0; t < jm; ++t) {
    tris.push_back(mesh.triangle(t));
    acc += mesh.weight(t);
    cum[static_cast<std::size_t>(t)] = acc;
  }
  Philox rng(seed);
  std::vector<MeshPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int t = 0;
    if (jm > 1) {  // a single triangle consumes no selection draw
      const double u = rng.uniform() * acc;
      while (t + 1 < jm && cum[static_cast<std::size_t>(t)] < u) ++t;
    }
    out.push_back({draw_pattern(tris[static_cast<std::size_t>(t)], spec, rng), t});
  }
  return out;
}

}  // namespace pcdpe
