#include "pcdpe/delaunay.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace pcdpe {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace

int orient2d_sign(const Point& a, const Point& b, const Point& c) {
  const double detl = (b.x - a.x) * (c.y - a.y);
  const double detr = (b.y - a.y) * (c.x - a.x);
  const double det = detl - detr;
  const double detsum = std::abs(detl) + std::abs(detr);
  // Forward error bound for the double evaluation; beyond it the sign is
  // certain (constant a la Shewchuk's ccwerrboundA, padded).
  if (std::abs(det) > 4.0e-16 * detsum) return det > 0.0 ? 1 : -1;
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

int incircle_sign(const Point& a, const Point& b, const Point& c,
                  const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double bcdet = bdx * cdy - bdy * cdx;
  const double cadet = cdx * ady - cdy * adx;
  const double abdet = adx * bdy - ady * bdx;
  const double det = alift * bcdet + blift * cadet + clift * abdet;
  const double permanent = alift * (std::abs(bdx * cdy) + std::abs(bdy * cdx)) +
                           blift * (std::abs(cdx * ady) + std::abs(cdy * adx)) +
                           clift * (std::abs(adx * bdy) + std::abs(ady * bdx));
  if (std::abs(det) > 2.0e-15 * permanent) return det > 0.0 ? 1 : -1;
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y),
      dx(d.x), dy(d.y);
  const Rational adxr = ax - dx, adyr = ay - dy;
  const Rational bdxr = bx - dx, bdyr = by - dy;
  const Rational cdxr = cx - dx, cdyr = cy - dy;
  const Rational det_r = (adxr * adxr + adyr * adyr) * (bdxr * cdyr - bdyr * cdxr) +
                         (bdxr * bdxr + bdyr * bdyr) * (cdxr * adyr - cdyr * adxr) +
                         (cdxr * cdxr + cdyr * cdyr) * (adxr * bdyr - adyr * bdxr);
  return sign_of(det_r);
}

namespace {

constexpr int kGhost = -1;

struct Tri {
  std::array<int, 3> v;
  bool alive = true;
  bool ghost() const { return v[2] == kGhost; }
};

// Is q strictly inside the open segment (a, b)?  Assumes q collinear with ab.
bool strictly_between(const Point& a, const Point& b, const Point& q) {
  if (a.x != b.x) {
    return (a.x < q.x && q.x < b.x) || (b.x < q.x && q.x < a.x);
  }
  return (a.y < q.y && q.y < b.y) || (b.y < q.y && q.y < a.y);
}

class Builder {
 public:
  explicit Builder(std::span<const Point> markers)
      : pts_(markers.begin(), markers.end()) {}

  void run() {
    if (pts_.size() < 3) {
      throw GeometryError("Delaunay triangulation needs at least 3 markers");
    }
    check_duplicates();
    // Initial triangle from markers 0, 1 and the first non-collinear one.
    std::size_t k = 2;
    int orient = 0;
    while (k < pts_.size()) {
      orient = orient2d_sign(pts_[0], pts_[1], pts_[k]);
      if (orient != 0) break;
      ++k;
    }
    if (k == pts_.size()) {
      throw GeometryError("all markers are collinear");
    }
    const int i2 = static_cast<int>(k);
    if (orient > 0) {
      push_tri(0, 1, i2);
      push_tri(1, 0, kGhost);
      push_tri(i2, 1, kGhost);
      push_tri(0, i2, kGhost);
    } else {
      push_tri(0, i2, 1);
      push_tri(i2, 0, kGhost);
      push_tri(1, i2, kGhost);
      push_tri(0, 1, kGhost);
    }
    for (std::size_t i = 2; i < pts_.size(); ++i) {
      if (static_cast<int>(i) == i2) continue;
      insert(static_cast<int>(i));
    }
    verify_unambiguous();
  }

  std::vector<std::array<int, 3>> real_triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const Tri& t : tris_) {
      if (t.alive && !t.ghost()) out.push_back(t.v);
    }
    // Deterministic order independent of insertion history.
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void check_duplicates() const {
    std::vector<std::pair<Point, int>> sorted;
    sorted.reserve(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      sorted.emplace_back(pts_[i], static_cast<int>(i));
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
      return l.first.x != r.first.x ? l.first.x < r.first.x
                                    : l.first.y < r.first.y;
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].first.x == sorted[i - 1].first.x &&
          sorted[i].first.y == sorted[i - 1].first.y) {
        throw GeometryError("duplicate marker at index " +
                            std::to_string(sorted[i].second));
      }
    }
  }

  void push_tri(int a, int b, int c) { tris_.push_back({{a, b, c}, true}); }

  // Rotate a new triangle so the ghost, if any, sits in the last slot.
  void push_new(std::array<int, 3> v) {
    while (v[2] != kGhost && (v[0] == kGhost || v[1] == kGhost)) {
      v = {v[1], v[2], v[0]};
    }
    push_tri(v[0], v[1], v[2]);
  }

  bool dead(const Tri& t, int p) const {
    const Point& q = pts_[static_cast<std::size_t>(p)];
    if (t.ghost()) {
      const Point& a = pts_[static_cast<std::size_t>(t.v[0])];
      const Point& b = pts_[static_cast<std::size_t>(t.v[1])];
      const int o = orient2d_sign(a, b, q);
      if (o > 0) return true;
      return o == 0 && strictly_between(a, b, q);
    }
    return incircle_sign(pts_[static_cast<std::size_t>(t.v[0])],
                         pts_[static_cast<std::size_t>(t.v[1])],
                         pts_[static_cast<std::size_t>(t.v[2])], q) > 0;
  }

  void insert(int p) {
    std::vector<std::size_t> cavity;
    for (std::size_t idx = 0; idx < tris_.size(); ++idx) {
      if (tris_[idx].alive && dead(tris_[idx], p)) cavity.push_back(idx);
    }
    if (cavity.empty()) {
      // Cannot happen for a point distinct from all vertices: every point is
      // inside some circumdisk or beyond some hull edge.
      throw GeometryError("failed to locate cavity during insertion");
    }
    std::map<std::pair<int, int>, int> edge_count;
    for (std::size_t idx : cavity) {
      tris_[idx].alive = false;
      const auto& v = tris_[idx].v;
      for (int e = 0; e < 3; ++e) {
        const int x = v[static_cast<std::size_t>(e)];
        const int y = v[static_cast<std::size_t>((e + 1) % 3)];
        ++edge_count[{x, y}];
      }
    }
    for (const auto& [edge, count] : edge_count) {
      (void)count;
      // Boundary edges are those whose reverse is not in the cavity.
      if (edge_count.find({edge.second, edge.first}) == edge_count.end()) {
        push_new({edge.first, edge.second, p});
      }
    }
  }

  // With on-circle points never killing a triangle, the build produces a
  // valid Delaunay triangulation even with co-circular quadruples; the
  // triangulation is ambiguous (not unique) exactly when a flippable interior
  // edge has its opposite vertices exactly co-circular.
  void verify_unambiguous() const {
    std::map<std::pair<int, int>, std::pair<int, int>> opposite;
    for (const Tri& t : tris_) {
      if (!t.alive || t.ghost()) continue;
      for (int e = 0; e < 3; ++e) {
        const int x = t.v[static_cast<std::size_t>(e)];
        const int y = t.v[static_cast<std::size_t>((e + 1) % 3)];
        const int z = t.v[static_cast<std::size_t>((e + 2) % 3)];
        opposite[{x, y}] = {z, 1};
      }
    }
    for (const auto& [edge, zo] : opposite) {
      const auto rev = opposite.find({edge.second, edge.first});
      if (rev == opposite.end()) continue;
      if (edge.first > edge.second) continue;  // visit each edge once
      const int z1 = zo.first;
      const int z2 = rev->second.first;
      if (incircle_sign(pts_[static_cast<std::size_t>(edge.first)],
                        pts_[static_cast<std::size_t>(edge.second)],
                        pts_[static_cast<std::size_t>(z1)],
                        pts_[static_cast<std::size_t>(z2)]) == 0) {
        throw GeometryError(
            "markers contain an exactly co-circular quadruple; "
            "the Delaunay triangulation is not unique");
      }
    }
  }

  std::vector<Point> pts_;
  std::vector<Tri> tris_;
};

double tri_area(const Point& a, const Point& b, const Point& c) {
  return std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / 2.0;
}

}  // namespace

DelaunayMesh DelaunayMesh::build(std::span<const Point> markers) {
  Builder builder(markers);
  builder.run();
  DelaunayMesh mesh;
  mesh.markers_.assign(markers.begin(), markers.end());
  mesh.tris_ = builder.real_triangles();
  double total = 0.0;
  std::vector<double> areas;
  areas.reserve(mesh.tris_.size());
  for (const auto& t : mesh.tris_) {
    const double a =
        tri_area(mesh.markers_[static_cast<std::size_t>(t[0])],
                 mesh.markers_[static_cast<std::size_t>(t[1])],
                 mesh.markers_[static_cast<std::size_t>(t[2])]);
    areas.push_back(a);
    total += a;
  }
  mesh.hull_area_ = total;
  mesh.weights_.reserve(areas.size());
  for (double a : areas) mesh.weights_.push_back(a / total);
  return mesh;
}

Triangle DelaunayMesh::triangle(int t) const {
  const auto& v = tris_[static_cast<std::size_t>(t)];
  return Triangle(markers_[static_cast<std::size_t>(v[0])],
                  markers_[static_cast<std::size_t>(v[1])],
                  markers_[static_cast<std::size_t>(v[2])]);
}

int DelaunayMesh::locate(Point p) const {
  for (int t = 0; t < triangle_count(); ++t) {
    if (triangle(t).contains(p)) return t;
  }
  throw DomainError("point outside the convex hull of the markers");
}

std::vector<int> assign(std::span<const Point> points,
                        const DelaunayMesh& mesh) {
  // Materialize the triangles once; locate() would rebuild them per query.
  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(mesh.triangle_count()));
  for (int t = 0; t < mesh.triangle_count(); ++t) tris.push_back(mesh.triangle(t));
  std::vector<int> out(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    int found = -1;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (tris[t].contains(points[i])) {
        found = static_cast<int>(t);
        break;
      }
    }
    if (found < 0) {
      throw DomainError("point " + std::to_string(i) +
                        " lies outside the convex hull of the markers");
    }
    out[i] = found;
  }
  return out;
}

}  // namespace pcdpe
