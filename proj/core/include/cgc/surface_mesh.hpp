#pragma once

#include <functional>
#include <vector>

#include "cgc/grid_field.hpp"
#include "cgc/minkowski.hpp"

namespace cgc {

// Sampled entire spacelike graph x3 = f(x1, x2) over the square of
// half-width R. Normals (future unit timelike) and Gauss-curvature samples
// are filled by central differences at interior vertices; rim entries stay
// NaN.
struct SurfaceMesh {
  int n = 0;
  double half_width = 0.0;
  std::vector<double> f;
  std::vector<MinkVector> normal;    // empty until embedding samples computed
  std::vector<double> curvature;     // empty until embedding samples computed

  double spacing() const { return 2.0 * half_width / (n - 1); }
  double coord(int i) const { return -half_width + spacing() * i; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * n + i;
  }
  double height(int i, int j) const { return f[index(i, j)]; }
};

SurfaceMesh mesh_from(int n, double half_width,
                      const std::function<double(double, double)>& f);

// Largest |f(a) - f(b)| / |a - b| over grid edges; < 1 for spacelike meshes.
double max_edge_slope(const SurfaceMesh& mesh);

// Fill per-vertex normal nu = (grad f, 1)/sqrt(1 - |grad f|^2) and curvature
// K = det D2f / (1 - |grad f|^2)^2 by central differences (interior only).
void compute_embedding_samples(SurfaceMesh& mesh);

// Support function u(y) = sup over mesh vertices of <x, (y, 1)> sampled on a
// disk grid. A lower bound of the support function of the underlying
// surface, converging as half_width and resolution grow.
DiskField support_of_mesh(const SurfaceMesh& mesh, int grid_n);

// Entire graph of the dual function: heights are the Legendre transform of u
// on the target square. Throws NotGradientSurjective (with the covered
// radius in the message) when the sampled gradient image of u does not
// contain the requested square.
SurfaceMesh mesh_from_support(const DiskField& u, double half_width, int mesh_n = 0);

}  // namespace cgc
