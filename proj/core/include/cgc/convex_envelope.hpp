#pragma once

#include <array>
#include <vector>

#include "cgc/boundary_function.hpp"
#include "cgc/grid_field.hpp"
#include "cgc/planar_region.hpp"

namespace cgc {

// Convex envelope of a boundary datum: the lower convex hull of the lifted
// finite nodes {(xi_i, phi_i)}, evaluable at arbitrary points of the disk.
// +inf outside the convex hull of the finite nodes; equal to phi at every
// finite node; affine along every hull chord.
struct EnvelopeEvaluator {
  RegionKind kind = RegionKind::Empty;
  std::vector<Vec2> points;                   // finite nodes, CCW by angle
  std::vector<double> values;
  std::vector<std::array<int, 3>> triangles;  // lower-hull faces (CCW)

  double operator()(double x, double y) const;
  double operator()(Vec2 z) const { return (*this)(z.x, z.y); }
};

EnvelopeEvaluator make_envelope_evaluator(const BoundaryFunction& phi);

// The envelope sampled on an n x n disk grid.
DiskField convex_envelope(const BoundaryFunction& phi, int grid_n);

}  // namespace cgc
