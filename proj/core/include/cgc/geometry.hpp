#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Planar geometry shared by the region, measure, and envelope code: a small
// 2-vector, half-planes, and convex-polygon clipping.
namespace cgc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
  Vec2 perp() const { return {-y, x}; }
  Vec2 normalized() const {
    double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
  }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Closed half-plane {z : n.z + c >= 0}.
struct HalfPlane {
  Vec2 n;
  double c = 0.0;
  double eval(Vec2 z) const { return n.dot(z) + c; }
};

// Convex polygon as a counterclockwise vertex loop; empty vector = empty set.
using Polygon = std::vector<Vec2>;

// Sutherland-Hodgman clip of a convex polygon by one half-plane.
inline Polygon clip(const Polygon& poly, const HalfPlane& hp) {
  Polygon out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % m];
    const double fa = hp.eval(a);
    const double fb = hp.eval(b);
    if (fa >= 0.0) {
      out.push_back(a);
      if (fb < 0.0) {
        const double t = fa / (fa - fb);
        out.push_back(a + (b - a) * t);
      }
    } else if (fb >= 0.0) {
      const double t = fa / (fa - fb);
      out.push_back(a + (b - a) * t);
    }
  }
  return out;
}

inline Polygon clip(Polygon poly, const std::vector<HalfPlane>& hps) {
  for (const auto& hp : hps) {
    poly = clip(poly, hp);
    if (poly.empty()) break;
  }
  return poly;
}

// Intersection of two convex polygons (clip `a` by the half-planes of `b`,
// which must be counterclockwise).
inline Polygon convex_intersection(const Polygon& a, const Polygon& b) {
  Polygon out = a;
  const std::size_t m = b.size();
  for (std::size_t i = 0; i < m && !out.empty(); ++i) {
    const Vec2 p = b[i];
    const Vec2 q = b[(i + 1) % m];
    const Vec2 e = q - p;
    // Interior of a CCW polygon lies left of each edge: cross(e, z-p) >= 0.
    HalfPlane hp{e.perp(), -e.perp().dot(p)};
    out = clip(out, hp);
  }
  return out;
}

// Signed area of a polygon loop (positive for counterclockwise).
inline double polygon_area(const Polygon& poly) {
  const std::size_t m = poly.size();
  if (m < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    s += poly[i].cross(poly[(i + 1) % m]);
  }
  return 0.5 * s;
}

// Axis-aligned square [-w, w]^2 as a counterclockwise polygon.
inline Polygon square_polygon(double w) {
  return {{-w, -w}, {w, -w}, {w, w}, {-w, w}};
}

}  // namespace cgc
