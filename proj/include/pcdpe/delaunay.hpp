#pragma once

#include <array>
#include <span>
#include <vector>

#include "pcdpe/geometry.hpp"

namespace pcdpe {

// Delaunay triangulation of a marker set with per-triangle area weights
// w_i = A(T_i) / A(hull).  Built by incremental (Bowyer-Watson) insertion
// with exact orientation / in-circle predicates: double-precision evaluation
// guarded by a forward error bound, falling back to exact rational
// arithmetic.  Exactly co-circular quadruples that make the triangulation
// ambiguous are an error.
class DelaunayMesh {
 public:
  static DelaunayMesh build(std::span<const Point> markers);

  int triangle_count() const { return static_cast<int>(tris_.size()); }
  const std::array<int, 3>& triangle_indices(int t) const {
    return tris_[static_cast<std::size_t>(t)];
  }
  Triangle triangle(int t) const;
  double weight(int t) const { return weights_[static_cast<std::size_t>(t)]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const Point> markers() const { return markers_; }
  double hull_area() const { return hull_area_; }

  // Lowest-index triangle containing p (barycentric containment with the
  // library tolerance); DomainError if p is outside the hull.
  int locate(Point p) const;

 private:
  std::vector<Point> markers_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<double> weights_;
  double hull_area_ = 0.0;
};

// Containing triangle per point; DomainError names the first offending index.
std::vector<int> assign(std::span<const Point> points,
                        const DelaunayMesh& mesh);

// Sign of the orientation of (a, b, c); exact.
int orient2d_sign(const Point& a, const Point& b, const Point& c);

// Sign of the in-circumcircle determinant of d against ccw (a, b, c); exact.
// Positive = strictly inside, zero = exactly on the circle.
int incircle_sign(const Point& a, const Point& b, const Point& c,
                  const Point& d);

}  // namespace pcdpe
