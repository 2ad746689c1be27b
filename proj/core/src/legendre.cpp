#include "cgc/legendre.hpp"

#include <algorithm>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/thread_pool.hpp"

namespace cgc {

GridField legendre_transform(const GridField& f, int target_n,
                             double target_half_width) {
  const int ns = f.n;
  const int nt = target_n;
  const double neg_inf = -xr::inf;

  bool any_finite = false;
  for (double val : f.v) {
    if (xr::finite(val)) {
      any_finite = true;
      break;
    }
  }
  if (!any_finite) {
    throw Error(ErrorCode::AllInfinite, "legendre transform of an everywhere-infinite field");
  }

  GridField out(nt, target_half_width, 0.0);
  out.closed_convex = true;

  std::vector<double> sx(ns), ty(nt);
  for (int i = 0; i < ns; ++i) sx[i] = f.coord(i);
  for (int j = 0; j < nt; ++j) ty[j] = out.coord(j);

  // Pass 1: g(i, jt) = sup_{x2} (x2 * y2[jt] - f(x1[i], x2)); -inf marks an
  // all-infinite column.
  std::vector<double> g(static_cast<std::size_t>(ns) * nt, neg_inf);
  parallel_for(0, ns, [&](long li) {
    const int i = static_cast<int>(li);
    for (int jt = 0; jt < nt; ++jt) {
      double best = neg_inf;
      const double y2 = ty[jt];
      for (int j = 0; j < ns; ++j) {
        const double val = f.at(i, j);
        if (!xr::finite(val)) continue;
        best = std::max(best, sx[j] * y2 - val);
      }
      g[static_cast<std::size_t>(i) * nt + jt] = best;
    }
  });

  // Pass 2: f*(it, jt) = sup_{x1} (x1 * y1[it] + g(x1, y2[jt])).
  parallel_for(0, nt, [&](long ljt) {
    const int jt = static_cast<int>(ljt);
    for (int it = 0; it < nt; ++it) {
      double best = neg_inf;
      const double y1 = ty[it];
      for (int i = 0; i < ns; ++i) {
        const double gv = g[static_cast<std::size_t>(i) * nt + jt];
        if (gv == neg_inf) continue;
        best = std::max(best, sx[i] * y1 + gv);
      }
      out.at(it, jt) = best;
    }
  });
  return out;
}

}  // namespace cgc
