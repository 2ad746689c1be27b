#include "cgc/support_action.hpp"

#include <cmath>

#include "cgc/errors.hpp"

namespace cgc {

DiskField boost_support_action(const DiskField& u, double eps, Vec2 axis) {
  if (std::abs(eps) > 50.0) {
    throw Error(ErrorCode::InvalidArgument,
                "boost rapidity beyond 50 would overflow cosh/sinh scaling");
  }
  if (eps == 0.0) return u;
  const double an = axis.norm();
  if (!(an > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "boost axis must be a nonzero 2-vector");
  }
  axis = axis * (1.0 / an);
  const double ch = std::cosh(eps);
  const double sh = std::sinh(eps);
  auto rot = [&](Vec2 z) {  // rotation sending (1,0) to axis
    return Vec2{axis.x * z.x - axis.y * z.y, axis.y * z.x + axis.x * z.y};
  };
  auto rot_inv = [&](Vec2 z) {
    return Vec2{axis.x * z.x + axis.y * z.y, -axis.y * z.x + axis.x * z.y};
  };

  DiskField out(u.n, 1.0);
  out.closed_convex = u.closed_convex;
  for (int j = 0; j < u.n; ++j) {
    for (int i = 0; i < u.n; ++i) {
      const Vec2 z{out.coord(i), out.coord(j)};
      if (z.norm2() > 1.0) {
        out.at(i, j) = xr::inf;
        continue;
      }
      const Vec2 w = rot_inv(z);
      const double lambda = ch + w.x * sh;  // >= exp(-|eps|) > 0 on the disk
      Vec2 s{(w.x * ch + sh) / lambda, w.y / lambda};
      // The boost maps the closed disk to itself; clamp the roundoff spill.
      const double sn = s.norm();
      if (sn > 1.0) s = s * (1.0 / sn);
      const Vec2 src = rot(s);
      out.at(i, j) = xr::scale(lambda, u.eval(src.x, src.y));
    }
  }
  return out;
}

}  // namespace cgc
