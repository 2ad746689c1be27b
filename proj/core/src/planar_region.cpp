#include "cgc/planar_region.hpp"

#include <algorithm>
#include <cmath>

namespace cgc {

PlanarConvexRegion finiteness_hull(const BoundaryFunction& phi) {
  PlanarConvexRegion region;
  std::vector<double> angles;
  for (const auto& node : finite_nodes(phi)) angles.push_back(node.theta);
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  for (double a : angles) region.vertices.push_back({std::cos(a), std::sin(a)});
  if (region.vertices.size() <= 1) {
    region.kind = RegionKind::Empty;
  } else if (region.vertices.size() == 2) {
    region.kind = RegionKind::Segment;
    region.edge_kind = {EdgeKind::Chord, EdgeKind::Chord};
  } else {
    region.kind = RegionKind::Polygon;
    region.edge_kind.assign(region.vertices.size(), EdgeKind::Chord);
  }
  return region;
}

bool region_contains(const PlanarConvexRegion& region, Vec2 p, double tol) {
  if (region.kind != RegionKind::Polygon) return false;
  const std::size_t m = region.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = region.vertices[i];
    const Vec2 b = region.vertices[(i + 1) % m];
    if ((b - a).cross(p - a) < -tol) return false;
  }
  return true;
}

Polygon region_polygon(const PlanarConvexRegion& region) {
  return region.vertices;
}

double region_inradius(const PlanarConvexRegion& region) {
  if (region.kind != RegionKind::Polygon) return 0.0;
  const std::size_t m = region.vertices.size();
  // Inward edge offsets: n_i . p + c_i >= r with unit inward normals. The
  // Chebyshev center is determined by at most three active edges; enumerate
  // triples and keep the best feasible candidate.
  std::vector<Vec2> normals(m);
  std::vector<double> offsets(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = region.vertices[i];
    const Vec2 b = region.vertices[(i + 1) % m];
    const Vec2 inward = (b - a).perp().normalized();
    normals[i] = inward;
    offsets[i] = -inward.dot(a);
  }
  auto feasible = [&](Vec2 p, double r) {
    for (std::size_t i = 0; i < m; ++i) {
      if (normals[i].dot(p) + offsets[i] < r - 1e-12) return false;
    }
    return true;
  };
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        // Solve n_t . p + c_t = r for t in {i, j, k}.
        const double a11 = normals[i].x, a12 = normals[i].y;
        const double a21 = normals[j].x, a22 = normals[j].y;
        const double a31 = normals[k].x, a32 = normals[k].y;
        // Unknowns (px, py, r); rows: a_t1 px + a_t2 py - r = -c_t.
        const double det = a11 * (a22 * (-1.0) - (-1.0) * a32) -
                           a12 * (a21 * (-1.0) - (-1.0) * a31) +
                           (-1.0) * (a21 * a32 - a22 * a31);
        if (std::abs(det) < 1e-14) continue;
        const double b1 = -offsets[i], b2 = -offsets[j], b3 = -offsets[k];
        const double px = (b1 * (a22 * (-1.0) - (-1.0) * a32) -
                           a12 * (b2 * (-1.0) - (-1.0) * b3) +
                           (-1.0) * (b2 * a32 - a22 * b3)) /
                          det;
        const double py = (a11 * (b2 * (-1.0) - (-1.0) * b3) -
                           b1 * (a21 * (-1.0) - (-1.0) * a31) +
                           (-1.0) * (a21 * b3 - b2 * a31)) /
                          det;
        const double r = (a11 * (a22 * b3 - b2 * a32) -
                          a12 * (a21 * b3 - b2 * a31) +
                          b1 * (a21 * a32 - a22 * a31)) /
                         det;
        if (r > best && feasible({px, py}, r)) best = r;
      }
    }
  }
  return best;
}

}  // namespace cgc
