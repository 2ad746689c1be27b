#include "cgc/grid_field.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cgc {

double GridField::eval(double x, double y) const {
  const double L = half_width;
  const double h = spacing();
  if (x < -L || x > L || y < -L || y > L) return xr::inf;
  // Queries that hit a node exactly return the node value, even when an
  // adjacent cell corner is +inf.
  const double snap = 1e-12 * std::max(1.0, L);
  const int si = static_cast<int>(std::lround((x + L) / h));
  const int sj = static_cast<int>(std::lround((y + L) / h));
  if (std::abs(x - coord(si)) <= snap && std::abs(y - coord(sj)) <= snap) {
    return at(si, sj);
  }
  int i = static_cast<int>(std::floor((x + L) / h));
  int j = static_cast<int>(std::floor((y + L) / h));
  i = std::clamp(i, 0, n - 2);
  j = std::clamp(j, 0, n - 2);
  const double v00 = at(i, j);
  const double v10 = at(i + 1, j);
  const double v01 = at(i, j + 1);
  const double v11 = at(i + 1, j + 1);
  if (!xr::finite(v00) || !xr::finite(v10) || !xr::finite(v01) || !xr::finite(v11)) {
    return xr::inf;
  }
  const double tx = (x - coord(i)) / h;
  const double ty = (y - coord(j)) / h;
  return (1.0 - tx) * (1.0 - ty) * v00 + tx * (1.0 - ty) * v10 +
         (1.0 - tx) * ty * v01 + tx * ty * v11;
}

void GridField::fill_from(const std::function<double(double, double)>& f) {
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      at(i, j) = f(coord(i), coord(j));
    }
  }
}

DiskField disk_field_from(int n, const std::function<double(double, double)>& f) {
  DiskField u(n, 1.0);
  u.fill_from([&](double x, double y) {
    return x * x + y * y <= 1.0 ? f(x, y) : xr::inf;
  });
  return u;
}

FieldDifference field_difference(const GridField& a, const GridField& b) {
  FieldDifference d;
  const std::size_t m = std::min(a.v.size(), b.v.size());
  for (std::size_t k = 0; k < m; ++k) {
    const bool fa = xr::finite(a.v[k]);
    const bool fb = xr::finite(b.v[k]);
    if (fa && fb) {
      d.max_abs = std::max(d.max_abs, std::abs(a.v[k] - b.v[k]));
    } else if (fa != fb) {
      ++d.mismatched_nodes;
    }
  }
  d.mismatched_nodes += static_cast<long>(std::max(a.v.size(), b.v.size()) - m);
  return d;
}

double min_second_difference(const GridField& u) {
  static constexpr int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  double lo = xr::inf;
  for (int j = 1; j < u.n - 1; ++j) {
    for (int i = 1; i < u.n - 1; ++i) {
      for (const auto& d : dirs) {
        const double a = u.at(i - d[0], j - d[1]);
        const double c = u.at(i, j);
        const double b = u.at(i + d[0], j + d[1]);
        if (xr::finite(a) && xr::finite(b) && xr::finite(c)) {
          lo = std::min(lo, a + b - 2.0 * c);
        }
      }
    }
  }
  return lo;
}

bool finite_set_midpoint_convex(const GridField& u, long samples) {
  std::vector<int> fi, fj;
  for (int j = 0; j < u.n; ++j) {
    for (int i = 0; i < u.n; ++i) {
      if (xr::finite(u.at(i, j))) {
        fi.push_back(i);
        fj.push_back(j);
      }
    }
  }
  if (fi.size() < 2) return true;
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<std::size_t> pick(0, fi.size() - 1);
  for (long s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    const int mi = (fi[a] + fi[b]) / 2;
    const int mj = (fj[a] + fj[b]) / 2;
    bool ok = false;
    for (int dj = -1; dj <= 1 && !ok; ++dj) {
      for (int di = -1; di <= 1 && !ok; ++di) {
        const int ii = mi + di;
        const int jj = mj + dj;
        if (ii >= 0 && ii < u.n && jj >= 0 && jj < u.n && xr::finite(u.at(ii, jj))) {
          ok = true;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace cgc
