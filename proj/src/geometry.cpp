#include "pcdpe/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace pcdpe {

namespace {
constexpr double kDegenerateArea = 1e-14;
}  // namespace

double Bary::max() const { return std::max(b1, std::max(b2, b3)); }

int Bary::argmax() const {
  int best = 0;
  double bv = b1;
  if (b2 > bv) {
    best = 1;
    bv = b2;
  }
  if (b3 > bv) best = 2;
  return best;
}

ProximityParam ProximityParam::finite(double r) {
  if (!(r >= 1.0)) throw DomainError("proximity parameter r must be >= 1");
  if (std::isinf(r)) return infinity();
  return ProximityParam(r, false);
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
  const double twice =
      (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (twice < 0.0) {  // store counter-clockwise
    std::swap(v_[1], v_[2]);
  }
  area_ = std::abs(twice) / 2.0;
  if (!(area_ > kDegenerateArea * (1.0 + std::abs(a.x) + std::abs(b.x) +
                                   std::abs(c.x) + std::abs(a.y) +
                                   std::abs(b.y) + std::abs(c.y)))) {
    throw GeometryError("degenerate (collinear) triangle");
  }
  const Point& p0 = v_[0];
  const Point& p1 = v_[1];
  const Point& p2 = v_[2];
  const double e1x = p1.x - p0.x, e1y = p1.y - p0.y;
  const double e2x = p2.x - p0.x, e2y = p2.y - p0.y;
  const double det = e1x * e2y - e1y * e2x;
  inv_[0][0] = e2y / det;
  inv_[0][1] = -e2x / det;
  inv_[1][0] = -e1y / det;
  inv_[1][1] = e1x / det;
}

Bary Triangle::barycentric(Point p) const {
  const double dx = p.x - v_[0].x;
  const double dy = p.y - v_[0].y;
  const double b2 = inv_[0][0] * dx + inv_[0][1] * dy;
  const double b3 = inv_[1][0] * dx + inv_[1][1] * dy;
  return {1.0 - b2 - b3, b2, b3};
}

Point Triangle::from_barycentric(const Bary& b) const {
  return {b.b1 * v_[0].x + b.b2 * v_[1].x + b.b3 * v_[2].x,
          b.b1 * v_[0].y + b.b2 * v_[1].y + b.b3 * v_[2].y};
}

int Triangle::vertex_region(Point p) const {
  const Bary b = barycentric(p);
  if (!b.inside()) throw DomainError("point outside triangle");
  return b.argmax();
}

Triangle Triangle::equilateral() {
  return Triangle({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
}

namespace {

// The proximity predicate in barycentric form, also used by Gamma_1.
bool proximity_impl(ProximityParam r, const Bary& bx, const Bary& bz) {
  if (!bz.inside()) return false;
  // x at a vertex of the support triangle: the region degenerates to {x}.
  const int vx = bx.argmax();
  if (bx[vx] >= 1.0 - kBaryTol) {
    return bz[vx] >= 1.0 - kBaryTol;
  }
  if (r.is_infinite()) return true;
  return (1.0 - bz[vx]) <= r.value() * (1.0 - bx[vx]);
}

}  // namespace

bool in_proximity_region(const Triangle& tri, ProximityParam r, Point x,
                         Point z) {
  return proximity_impl(r, tri.barycentric(x), tri.barycentric(z));
}

bool in_gamma1_region(const Triangle& tri, ProximityParam r, Point x,
                      Point z) {
  return in_proximity_region(tri, r, z, x);
}

AffineMap AffineMap::inverse() const {
  const double d = det();
  if (d == 0.0) throw GeometryError("singular affine map");
  AffineMap m;
  m.a[0][0] = a[1][1] / d;
  m.a[0][1] = -a[0][1] / d;
  m.a[1][0] = -a[1][0] / d;
  m.a[1][1] = a[0][0] / d;
  m.t[0] = -(m.a[0][0] * t[0] + m.a[0][1] * t[1]);
  m.t[1] = -(m.a[1][0] * t[0] + m.a[1][1] * t[1]);
  return m;
}

AffineMap AffineMap::then(const AffineMap& n) const {
  AffineMap m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.a[i][j] = n.a[i][0] * a[0][j] + n.a[i][1] * a[1][j];
    }
    m.t[i] = n.a[i][0] * t[0] + n.a[i][1] * t[1] + n.t[i];
  }
  return m;
}

AffineMap standardize(const Triangle& tri) {
  // Order the vertices so the longest edge goes to the base (0,0)-(1,0) and
  // the apex lands at c = (c1, c2) with 0 < c1 <= 1/2, c2 > 0; then shear and
  // scale with (u, v) -> (u + (1 - 2 c1)/sqrt(3) v, sqrt(3)/(2 c2) v).
  int apex = 0;
  double longest = -1.0;
  for (int i = 0; i < 3; ++i) {
    const Point& a = tri.vertex((i + 1) % 3);
    const Point& b = tri.vertex((i + 2) % 3);
    const double d2 = (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
    if (d2 > longest) {
      longest = d2;
      apex = i;
    }
  }
  const Point a = tri.vertex((apex + 1) % 3);
  const Point b = tri.vertex((apex + 2) % 3);
  const Point c = tri.vertex(apex);

  // Rigid motion + scaling taking a -> (0,0), b -> (1,0).
  const double len = std::sqrt(longest);
  const double cosb = (b.x - a.x) / len;
  const double sinb = (b.y - a.y) / len;
  AffineMap rigid;
  rigid.a[0][0] = cosb / len;
  rigid.a[0][1] = sinb / len;
  rigid.a[1][0] = -sinb / len;
  rigid.a[1][1] = cosb / len;
  rigid.t[0] = -(rigid.a[0][0] * a.x + rigid.a[0][1] * a.y);
  rigid.t[1] = -(rigid.a[1][0] * a.x + rigid.a[1][1] * a.y);

  Point ci = rigid(c);
  AffineMap flip;  // keep the apex above the base and left of the midline
  if (ci.y < 0.0) {
    flip.a[1][1] = -1.0;
  }
  if (ci.x > 0.5) {
    flip.a[0][0] = -1.0;
    flip.t[0] = 1.0;
  }
  AffineMap pre = rigid.then(flip);
  ci = pre(c);

  // Shear composed with the vertical rescale: (u, v) -> (u + s v, t v) with
  // t = sqrt(3)/(2 c2) and s = (1 - 2 c1)/sqrt(3) * t, sending (c1, c2) to
  // the apex (1/2, sqrt(3)/2) while fixing the base.
  const double c1 = ci.x;
  const double c2 = ci.y;
  AffineMap shear;
  shear.a[0][0] = 1.0;
  shear.a[0][1] = (1.0 - 2.0 * c1) / (2.0 * c2);
  shear.a[1][0] = 0.0;
  shear.a[1][1] = std::sqrt(3.0) / (2.0 * c2);
  return pre.then(shear);
}

Simplex::Simplex(std::vector<std::vector<double>> vertices)
    : v_(std::move(vertices)) {
  if (v_.size() < 3) throw GeometryError("simplex needs at least 3 vertices");
  dim_ = static_cast<int>(v_.size()) - 1;
  for (const auto& p : v_) {
    if (static_cast<int>(p.size()) != dim_) {
      throw GeometryError("simplex vertex dimension mismatch");
    }
  }
  // LU-factor the edge matrix E[:, j] = v_{j+1} - v_0 with partial pivoting.
  const int d = dim_;
  lu_.assign(static_cast<std::size_t>(d) * d, 0.0);
  piv_.resize(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      lu_[static_cast<std::size_t>(i) * d + j] = v_[j + 1][i] - v_[0][i];
    }
  }
  for (int k = 0; k < d; ++k) {
    int p = k;
    for (int i = k + 1; i < d; ++i) {
      if (std::abs(lu_[static_cast<std::size_t>(i) * d + k]) >
          std::abs(lu_[static_cast<std::size_t>(p) * d + k])) {
        p = i;
      }
    }
    piv_[k] = p;
    if (p != k) {
      for (int j = 0; j < d; ++j) {
        std::swap(lu_[static_cast<std::size_t>(k) * d + j],
                  lu_[static_cast<std::size_t>(p) * d + j]);
      }
    }
    const double pivot = lu_[static_cast<std::size_t>(k) * d + k];
    if (std::abs(pivot) < 1e-13) {
      throw GeometryError("degenerate simplex (affinely dependent vertices)");
    }
    for (int i = k + 1; i < d; ++i) {
      const double f = lu_[static_cast<std::size_t>(i) * d + k] / pivot;
      lu_[static_cast<std::size_t>(i) * d + k] = f;
      for (int j = k + 1; j < d; ++j) {
        lu_[static_cast<std::size_t>(i) * d + j] -=
            f * lu_[static_cast<std::size_t>(k) * d + j];
      }
    }
  }
}

std::vector<double> Simplex::barycentric(std::span<const double> p) const {
  const int d = dim_;
  if (static_cast<int>(p.size()) != d) {
    throw DomainError("point dimension mismatch");
  }
  std::vector<double> rhs(d);
  for (int i = 0; i < d; ++i) rhs[i] = p[i] - v_[0][i];
  for (int k = 0; k < d; ++k) {
    if (piv_[k] != k) std::swap(rhs[k], rhs[piv_[k]]);
    for (int i = k + 1; i < d; ++i) {
      rhs[i] -= lu_[static_cast<std::size_t>(i) * d + k] * rhs[k];
    }
  }
  for (int i = d - 1; i >= 0; --i) {
    for (int j = i + 1; j < d; ++j) {
      rhs[i] -= lu_[static_cast<std::size_t>(i) * d + j] * rhs[j];
    }
    rhs[i] /= lu_[static_cast<std::size_t>(i) * d + i];
  }
  std::vector<double> b(static_cast<std::size_t>(d) + 1);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    b[static_cast<std::size_t>(i) + 1] = rhs[i];
    sum += rhs[i];
  }
  b[0] = 1.0 - sum;
  return b;
}

bool Simplex::contains(std::span<const double> p, double tol) const {
  for (double w : barycentric(p)) {
    if (w < -tol) return false;
  }
  return true;
}

int Simplex::vertex_region(std::span<const double> p) const {
  const auto b = barycentric(p);
  int best = 0;
  for (int i = 1; i <= dim_; ++i) {
    if (b[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

bool in_proximity_region(const Simplex& s, ProximityParam r,
                         std::span<const double> x,
                         std::span<const double> z) {
  const auto bz = s.barycentric(z);
  for (double w : bz) {
    if (w < -kBaryTol) return false;
  }
  const auto bx = s.barycentric(x);
  int vx = 0;
  for (int i = 1; i <= s.dim(); ++i) {
    if (bx[static_cast<std::size_t>(i)] > bx[static_cast<std::size_t>(vx)]) {
      vx = i;
    }
  }
  if (bx[static_cast<std::size_t>(vx)] >= 1.0 - kBaryTol) {
    return bz[static_cast<std::size_t>(vx)] >= 1.0 - kBaryTol;
  }
  if (r.is_infinite()) return true;
  return (1.0 - bz[static_cast<std::size_t>(vx)]) <=
         r.value() * (1.0 - bx[static_cast<std::size_t>(vx)]);
}

}  // namespace pcdpe
