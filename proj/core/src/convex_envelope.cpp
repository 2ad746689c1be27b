#include "cgc/convex_envelope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "cgc/errors.hpp"

namespace cgc {

namespace {

// Signed volume test: with (a, b, c) counterclockwise in the plane, negative
// means the lifted point d lies strictly below the plane through the lifted
// a, b, c — the flip condition for a lower hull.
double below_plane(const EnvelopeEvaluator& e, int a, int b, int c, int d) {
  const double bax = e.points[b].x - e.points[a].x;
  const double bay = e.points[b].y - e.points[a].y;
  const double baz = e.values[b] - e.values[a];
  const double cax = e.points[c].x - e.points[a].x;
  const double cay = e.points[c].y - e.points[a].y;
  const double caz = e.values[c] - e.values[a];
  const double dax = e.points[d].x - e.points[a].x;
  const double day = e.points[d].y - e.points[a].y;
  const double daz = e.values[d] - e.values[a];
  return bax * (cay * daz - caz * day) - bay * (cax * daz - caz * dax) +
         baz * (cax * day - cay * dax);
}

}  // namespace

EnvelopeEvaluator make_envelope_evaluator(const BoundaryFunction& phi) {
  validate(phi);
  EnvelopeEvaluator e;
  for (const auto& node : finite_nodes(phi)) {
    e.points.push_back(node.point());
    e.values.push_back(node.value);
  }
  const int m = static_cast<int>(e.points.size());
  if (m == 1) {
    e.kind = RegionKind::Empty;
    return e;
  }
  if (m == 2) {
    e.kind = RegionKind::Segment;
    return e;
  }
  e.kind = RegionKind::Polygon;

  // Initial fan from the node of smallest angle; all nodes lie on the circle
  // (convex position), so every triangulation of the polygon is reachable by
  // edge flips and every interior edge is geometrically flippable.
  for (int i = 1; i + 1 < m; ++i) {
    e.triangles.push_back({0, i, i + 1});
  }

  const long max_flips = 10L * m * m + 100;
  long flips = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    // Map each interior edge (lo, hi) to the triangles adjacent to it.
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (int t = 0; t < static_cast<int>(e.triangles.size()); ++t) {
      for (int k = 0; k < 3; ++k) {
        int u = e.triangles[t][k];
        int v = e.triangles[t][(k + 1) % 3];
        if (u > v) std::swap(u, v);
        edge_tris[{u, v}].push_back(t);
      }
    }
    for (const auto& [edge, tris] : edge_tris) {
      if (tris.size() != 2) continue;
      auto& t1 = e.triangles[tris[0]];
      auto& t2 = e.triangles[tris[1]];
      // Opposite vertices of the shared edge.
      int c = -1, d = -1;
      for (int k = 0; k < 3; ++k) {
        if (t1[k] != edge.first && t1[k] != edge.second) c = t1[k];
        if (t2[k] != edge.first && t2[k] != edge.second) d = t2[k];
      }
      // Orient (a, b, c) counterclockwise.
      int a = edge.first, b = edge.second;
      const Vec2 ab = e.points[b] - e.points[a];
      const Vec2 ac = e.points[c] - e.points[a];
      if (ab.cross(ac) < 0.0) std::swap(a, b);
      const double scale = std::max({1.0, std::abs(e.values[a]), std::abs(e.values[b]),
                                     std::abs(e.values[c]), std::abs(e.values[d])});
      if (below_plane(e, a, b, c, d) < -1e-13 * scale) {
        // Replace diagonal (a, b) with (c, d): quad (a, d, b, c) counterclockwise.
        t1 = {a, d, c};
        t2 = {d, b, c};
        changed = true;
        if (++flips > max_flips) {
          throw Error(ErrorCode::NonConvergence,
                      "lower-hull flip loop exceeded its iteration budget");
        }
        break;  // adjacency map is stale; rebuild
      }
    }
  }
  return e;
}

double EnvelopeEvaluator::operator()(double x, double y) const {
  const Vec2 z{x, y};
  if (kind == RegionKind::Empty) {
    if (points.size() == 1 && (z - points[0]).norm() <= 1e-12) return values[0];
    return xr::inf;
  }
  if (kind == RegionKind::Segment) {
    const Vec2 a = points[0], b = points[1];
    const Vec2 d = b - a;
    const double len2 = d.norm2();
    const double t = (z - a).dot(d) / len2;
    if (t < -1e-12 || t > 1.0 + 1e-12) return xr::inf;
    const Vec2 proj = a + d * std::clamp(t, 0.0, 1.0);
    if ((z - proj).norm() > 1e-9) return xr::inf;
    return values[0] + std::clamp(t, 0.0, 1.0) * (values[1] - values[0]);
  }
  for (const auto& tri : triangles) {
    const Vec2 a = points[tri[0]], b = points[tri[1]], c = points[tri[2]];
    const double area = (b - a).cross(c - a);
    if (area <= 0.0) continue;
    const double la = (b - z).cross(c - z) / area;
    const double lb = (c - z).cross(a - z) / area;
    const double lc = (a - z).cross(b - z) / area;
    if (la >= -1e-10 && lb >= -1e-10 && lc >= -1e-10) {
      return la * values[tri[0]] + lb * values[tri[1]] + lc * values[tri[2]];
    }
  }
  return xr::inf;
}

DiskField convex_envelope(const BoundaryFunction& phi, int grid_n) {
  const EnvelopeEvaluator e = make_envelope_evaluator(phi);
  DiskField u(grid_n, 1.0);
  u.closed_convex = true;
  u.fill_from([&](double x, double y) { return e(x, y); });
  return u;
}

}  // namespace cgc
