#include "cgc/surface_mesh.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/legendre.hpp"

namespace cgc {

SurfaceMesh mesh_from(int n, double half_width,
                      const std::function<double(double, double)>& f) {
  SurfaceMesh mesh;
  mesh.n = n;
  mesh.half_width = half_width;
  mesh.f.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      mesh.f[mesh.index(i, j)] = f(mesh.coord(i), mesh.coord(j));
    }
  }
  return mesh;
}

double max_edge_slope(const SurfaceMesh& mesh) {
  const double h = mesh.spacing();
  double worst = 0.0;
  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      if (i + 1 < mesh.n) {
        worst = std::max(worst,
                         std::abs(mesh.height(i + 1, j) - mesh.height(i, j)) / h);
      }
      if (j + 1 < mesh.n) {
        worst = std::max(worst,
                         std::abs(mesh.height(i, j + 1) - mesh.height(i, j)) / h);
      }
    }
  }
  return worst;
}

void compute_embedding_samples(SurfaceMesh& mesh) {
  const int n = mesh.n;
  const double h = mesh.spacing();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  mesh.normal.assign(static_cast<std::size_t>(n) * n, MinkVector{nan, nan, nan});
  mesh.curvature.assign(static_cast<std::size_t>(n) * n, nan);
  for (int j = 1; j < n - 1; ++j) {
    for (int i = 1; i < n - 1; ++i) {
      const double fx = (mesh.height(i + 1, j) - mesh.height(i - 1, j)) / (2.0 * h);
      const double fy = (mesh.height(i, j + 1) - mesh.height(i, j - 1)) / (2.0 * h);
      const double fxx =
          (mesh.height(i + 1, j) - 2.0 * mesh.height(i, j) + mesh.height(i - 1, j)) /
          (h * h);
      const double fyy =
          (mesh.height(i, j + 1) - 2.0 * mesh.height(i, j) + mesh.height(i, j - 1)) /
          (h * h);
      const double fxy = (mesh.height(i + 1, j + 1) - mesh.height(i - 1, j + 1) -
                          mesh.height(i + 1, j - 1) + mesh.height(i - 1, j - 1)) /
                         (4.0 * h * h);
      const double g2 = fx * fx + fy * fy;
      if (g2 < 1.0) {
        const double w = std::sqrt(1.0 - g2);
        mesh.normal[mesh.index(i, j)] = MinkVector{fx / w, fy / w, 1.0 / w};
        mesh.curvature[mesh.index(i, j)] =
            (fxx * fyy - fxy * fxy) / ((1.0 - g2) * (1.0 - g2));
      }
    }
  }
}

DiskField support_of_mesh(const SurfaceMesh& mesh, int grid_n) {
  if (mesh.n <= 0 || mesh.f.empty()) {
    throw Error(ErrorCode::EmptyMesh, "support of an empty mesh");
  }
  // <x, (y, 1)> = x1 y1 + x2 y2 - f(x1, x2), so the support function is the
  // Legendre transform of the height field.
  GridField heights(mesh.n, mesh.half_width, 0.0);
  heights.v = mesh.f;
  GridField raw = legendre_transform(heights, grid_n, 1.0);
  DiskField u(grid_n, 1.0);
  u.closed_convex = true;
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      const double x = u.coord(i);
      const double y = u.coord(j);
      u.at(i, j) = (x * x + y * y <= 1.0) ? raw.at(i, j) : xr::inf;
    }
  }
  return u;
}

SurfaceMesh mesh_from_support(const DiskField& u, double half_width, int mesh_n) {
  if (mesh_n <= 0) mesh_n = u.n;
  // Sampled gradient image must cover the requested square. Coverage is
  // measured by the support function of the set of central-difference
  // gradients against the square's support function over 64 directions.
  const int n = u.n;
  const double h = u.spacing();
  std::vector<Vec2> grads;
  grads.reserve(static_cast<std::size_t>(n) * n / 2);
  for (int j = 1; j < n - 1; ++j) {
    for (int i = 1; i < n - 1; ++i) {
      const double e = u.at(i + 1, j), w = u.at(i - 1, j);
      const double nn = u.at(i, j + 1), s = u.at(i, j - 1);
      if (xr::finite(e) && xr::finite(w) && xr::finite(nn) && xr::finite(s)) {
        grads.push_back({(e - w) / (2.0 * h), (nn - s) / (2.0 * h)});
      }
    }
  }
  if (grads.empty()) {
    throw Error(ErrorCode::NotGradientSurjective,
                "gradient image empty (covered radius 0)");
  }
  double covered_radius = xr::inf;
  bool covers_square = true;
  for (int k = 0; k < 64; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 64.0;
    const Vec2 e{std::cos(a), std::sin(a)};
    double sup = -xr::inf;
    for (const Vec2& g : grads) sup = std::max(sup, g.dot(e));
    covered_radius = std::min(covered_radius, sup);
    if (sup < half_width * (std::abs(e.x) + std::abs(e.y))) covers_square = false;
  }
  if (!covers_square) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "gradient image does not cover the square of half-width %g "
                  "(covered radius %.6g)",
                  half_width, covered_radius);
    throw Error(ErrorCode::NotGradientSurjective, msg);
  }

  GridField dual = legendre_transform(u, mesh_n, half_width);
  SurfaceMesh mesh;
  mesh.n = mesh_n;
  mesh.half_width = half_width;
  mesh.f = dual.v;
  return mesh;
}

}  // namespace cgc
