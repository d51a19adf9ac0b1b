#pragma once

#include <vector>

#include "pcdpe/geometry.hpp"
#include "pcdpe/rng.hpp"

namespace pcdpe {

class DelaunayMesh;

// Sampling pattern: complete spatial randomness, or the segregation /
// association alternatives with carve-out parameter eps in (0, sqrt(3)/3).
// The carve-outs are defined in barycentric coordinates, so the same spec
// applies to arbitrary triangles.
struct PatternSpec {
  enum class Kind { Null, Segregation, Association };

  Kind kind = Kind::Null;
  double eps = 0.0;

  static PatternSpec null() { return {Kind::Null, 0.0}; }
  static PatternSpec segregation(double eps);
  static PatternSpec association(double eps);

  // Fraction of the triangle area retained by the rejection rule.
  double acceptance_probability() const;
};

// Rejection rule of the pattern:
//   segregation keeps x with max_i b_i(x) <= 1 - 2 eps / sqrt(3),
//   association keeps x with max_i b_i(x) >= 1/3 + 2 eps / sqrt(3).
bool pattern_accepts(const Triangle& tri, const PatternSpec& spec, Point p);

// Draw n points from the pattern in tri.  Null sampling uses the standard
// barycentric fold; alternatives are rejection-sampled with pattern_accepts.
std::vector<Point> sample(const Triangle& tri, const PatternSpec& spec, int n,
                          RngSeed seed);

// Segregation carves delta * 100% of the area away from the vertices; the
// two-regime map switches at eps = sqrt(3)/4.
double delta_from_epsilon(double eps);
double epsilon_from_delta(double delta);

struct MeshPoint {
  Point p;
  int triangle = 0;
};

// Mesh sampling: triangle chosen with probability proportional to area, then
// the per-triangle pattern above.  Null reduces to uniform on the hull.
std::vector<MeshPoint> sample_mesh(const DelaunayMesh& mesh,
                                   const PatternSpec& spec, int n,
                                   RngSeed seed);

}  // namespace pcdpe
