#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pcdpe/errors.hpp"

namespace pcdpe {

inline constexpr double kBaryTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Barycentric weights w.r.t. a triangle; components sum to one.
struct Bary {
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;

  double operator[](int i) const { return i == 0 ? b1 : (i == 1 ? b2 : b3); }
  double max() const;
  // Smallest index attaining the maximum weight (deterministic tie rule).
  int argmax() const;
  bool inside(double tol = kBaryTol) const {
    return b1 >= -tol && b2 >= -tol && b3 >= -tol;
  }
};

// Expansion factor r in [1, inf].  Infinity is a first-class value rather
// than a large float so the limit definitions hold exactly.
class ProximityParam {
 public:
  static ProximityParam finite(double r);
  static ProximityParam infinity() { return ProximityParam(0.0, true); }

  bool is_infinite() const { return inf_; }
  double value() const { return r_; }  // meaningful only when finite

 private:
  ProximityParam(double r, bool inf) : r_(r), inf_(inf) {}
  double r_;
  bool inf_;
};

// Non-degenerate triangle stored counter-clockwise.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c);

  const Point& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  double area() const { return area_; }

  Bary barycentric(Point p) const;
  Point from_barycentric(const Bary& b) const;
  bool contains(Point p, double tol = kBaryTol) const {
    return barycentric(p).inside(tol);
  }

  // Index (0-based) of the center-of-mass vertex region containing p,
  // equivalently the barycentric argmax; ties go to the smallest index.
  int vertex_region(Point p) const;

  // Standard equilateral triangle ((0,0),(1,0),(1/2,sqrt(3)/2)).
  static Triangle equilateral();

 private:
  std::array<Point, 3> v_;
  double area_;
  // Cached inverse of the edge matrix for barycentric conversion.
  double inv_[2][2];
};

// z in N_PE^r(x): the r-scaled triangle anchored at the vertex whose region
// contains x, intersected with the triangle.  In barycentric terms the
// distance from vertex v to the edge-parallel line through p scales as
// (1 - b_v(p)), so membership is (1 - b_v(z)) <= r * (1 - b_v(x)).
bool in_proximity_region(const Triangle& tri, ProximityParam r, Point x,
                         Point z);

// z in Gamma_1^r(x) = {z : x in N_PE^r(z)}.
bool in_gamma1_region(const Triangle& tri, ProximityParam r, Point x, Point z);

// Affine map y = A p + t.
struct AffineMap {
  double a[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  double t[2] = {0.0, 0.0};

  Point operator()(Point p) const {
    return {a[0][0] * p.x + a[0][1] * p.y + t[0],
            a[1][0] * p.x + a[1][1] * p.y + t[1]};
  }
  double det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
  AffineMap inverse() const;
  AffineMap then(const AffineMap& next) const;  // next o this
};

// Uniformity-preserving affine map sending tri's vertices onto the standard
// equilateral triangle (up to vertex relabeling).
AffineMap standardize(const Triangle& tri);

// Simplex in d >= 2 dimensions with d+1 affinely independent vertices.
class Simplex {
 public:
  explicit Simplex(std::vector<std::vector<double>> vertices);

  int dim() const { return dim_; }
  const std::vector<double>& vertex(int i) const {
    return v_[static_cast<std::size_t>(i)];
  }

  // d+1 barycentric weights of p.
  std::vector<double> barycentric(std::span<const double> p) const;
  bool contains(std::span<const double> p, double tol = kBaryTol) const;
  int vertex_region(std::span<const double> p) const;

 private:
  int dim_;
  std::vector<std::vector<double>> v_;
  std::vector<double> lu_;        // factored (d x d) edge matrix
  std::vector<int> piv_;
};

// d-dimensional proportional-edge proximity predicate; same barycentric rule
// as the planar case with d+1 weights.
bool in_proximity_region(const Simplex& s, ProximityParam r,
                         std::span<const double> x, std::span<const double> z);

}  // namespace pcdpe
