#pragma once

#include <vector>

#include "cgc/boundary_function.hpp"
#include "cgc/geometry.hpp"

namespace cgc {

// Convex subregion of the closed unit disk bounded by chords and circular
// arcs: the finiteness hull of a boundary datum, essential domains, and the
// shrunken exhaustion domains all live here.
enum class EdgeKind { Chord, Arc };
enum class RegionKind { Empty, Segment, Polygon };

struct PlanarConvexRegion {
  RegionKind kind = RegionKind::Empty;
  std::vector<Vec2> vertices;       // counterclockwise
  std::vector<EdgeKind> edge_kind;  // edge i joins vertices[i] -> vertices[i+1 mod m]
};

// Interior of the convex hull of the finite nodes of phi. All finite nodes
// lie on the circle, so the hull is their angular sort; every edge is a
// chord. Kind reflects degeneracy: Empty (<= 1 distinct direction), Segment
// (exactly 2), Polygon (>= 3).
PlanarConvexRegion finiteness_hull(const BoundaryFunction& phi);

// Signed distance-like membership: true iff p lies in the closed region
// (polygon kind only; Segment/Empty contain nothing in their interior).
bool region_contains(const PlanarConvexRegion& region, Vec2 p, double tol = 0.0);

Polygon region_polygon(const PlanarConvexRegion& region);

// Chebyshev center: the largest radius of a disk inscribed in the region
// (0 for degenerate kinds).
double region_inradius(const PlanarConvexRegion& region);

}  // namespace cgc
