#pragma once

#include "cgc/geometry.hpp"
#include "cgc/grid_field.hpp"

namespace cgc {

// Action of the boost of rapidity eps along `axis` on a support function:
// in boost-adapted coordinates,
//   u_eps(x, y) = (cosh eps + x sinh eps) *
//                 u((x cosh eps + sinh eps) / (cosh eps + x sinh eps),
//                   y / (cosh eps + x sinh eps)),
// conjugated by the rotation sending (1, 0) to axis. Evaluated on the target
// grid by bilinear interpolation with +inf propagation. Rejects |eps| > 50.
DiskField boost_support_action(const DiskField& u, double eps, Vec2 axis);

}  // namespace cgc
