#pragma once

#include <vector>

#include "cgc/grid_field.hpp"

namespace cgc {

// Half-open node-index rectangle [i0, i1) x [j0, j1): a "cell" of grid
// nodes. Cells that partition a node set yield additive measures.
struct GridCellRange {
  int i0 = 0;
  int j0 = 0;
  int i1 = 0;
  int j1 = 0;
};

// Aleksandrov Monge-Ampere measure of each cell: the area of the union of
// per-node subgradient sets. Each node's subgradient polygon is the
// intersection of the half-planes {p : u(x') >= u(x) + p.(x'-x)} over ALL
// finite grid nodes x' (a global test); for convex u distinct nodes overlap
// only in measure zero, so the union area is the sum of polygon areas.
// Polygons are clipped to the slope window |p|_inf <= slope_window. Throws
// InfiniteCell when a queried cell contains a +inf node.
std::vector<double> ma_measure(const GridField& u,
                               const std::vector<GridCellRange>& cells,
                               double slope_window = 1e3);

}  // namespace cgc
