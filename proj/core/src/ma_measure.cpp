#include "cgc/ma_measure.hpp"

#include <algorithm>
#include <cmath>

#include "cgc/errors.hpp"
#include "cgc/geometry.hpp"
#include "cgc/thread_pool.hpp"

namespace cgc {

namespace {

// Subgradient polygon of node (i, j): all slopes p with
// p . (x' - x) <= u(x') - u(x) for every finite node x'.
double node_polygon_area(const GridField& u, int i, int j, double slope_window) {
  const double ux = u.at(i, j);
  if (!xr::finite(ux)) return 0.0;
  const double xi = u.coord(i);
  const double yj = u.coord(j);
  Polygon poly = square_polygon(slope_window);
  for (int jj = 0; jj < u.n && !poly.empty(); ++jj) {
    const double dy = u.coord(jj) - yj;
    for (int ii = 0; ii < u.n; ++ii) {
      if (ii == i && jj == j) continue;
      const double val = u.at(ii, jj);
      if (!xr::finite(val)) continue;
      const double dx = u.coord(ii) - xi;
      // p . d <= val - ux  <=>  (-d) . p + (val - ux) >= 0.
      poly = clip(poly, HalfPlane{{-dx, -dy}, val - ux});
      if (poly.empty()) break;
    }
  }
  return std::abs(polygon_area(poly));
}

}  // namespace

std::vector<double> ma_measure(const GridField& u,
                               const std::vector<GridCellRange>& cells,
                               double slope_window) {
  // Collect the nodes touched by any cell (deduplicated) and reject cells
  // holding +inf nodes up front.
  std::vector<long> node_ids;
  std::vector<char> seen(u.v.size(), 0);
  for (const auto& cell : cells) {
    if (cell.i0 < 0 || cell.j0 < 0 || cell.i1 > u.n || cell.j1 > u.n) {
      throw Error(ErrorCode::InvalidArgument, "cell indices outside the grid");
    }
    for (int j = cell.j0; j < cell.j1; ++j) {
      for (int i = cell.i0; i < cell.i1; ++i) {
        if (!xr::finite(u.at(i, j))) {
          throw Error(ErrorCode::InfiniteCell,
                      "Monge-Ampere measure queried on a cell with a +inf node");
        }
        const long id = static_cast<long>(u.index(i, j));
        if (!seen[id]) {
          seen[id] = 1;
          node_ids.push_back(id);
        }
      }
    }
  }

  std::vector<double> area(u.v.size(), 0.0);
  parallel_for(0, static_cast<long>(node_ids.size()), [&](long k) {
    const long id = node_ids[k];
    const int i = static_cast<int>(id % u.n);
    const int j = static_cast<int>(id / u.n);
    area[id] = node_polygon_area(u, i, j, slope_window);
  });

  std::vector<double> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    double sum = 0.0;
    for (int j = cell.j0; j < cell.j1; ++j) {
      for (int i = cell.i0; i < cell.i1; ++i) {
        sum += area[u.index(i, j)];
      }
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace cgc
