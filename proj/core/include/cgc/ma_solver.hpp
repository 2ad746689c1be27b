#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cgc/geometry.hpp"
#include "cgc/grid_field.hpp"

namespace cgc {

using PointFunction = std::function<double(double, double)>;

struct SwOptions {
  double tol = 1e-10;            // Newton stop: max |F| / max(nu, 1)
  int max_newton = 60;           // damped Newton iterations
  int max_poisson = 40000;       // globalizer sweeps
  double poisson_handoff = 0.5;  // hand off to Newton at this relative residual
  bool best_iterate_on_failure = true;
};

struct SwReport {
  int unknowns = 0;
  int poisson_iterations = 0;
  int newton_iterations = 0;
  double residual = 0.0;  // final max relative residual
  bool converged = false;
};

// Solves the generalized-curvature equation
//   det_h u := S_x u * S_y u - (cross difference)^2 = nu
// on the region {n.z + c > 0 for all walls} intersected with the disk
// |z| < clip_radius (capped at 1 - h), with Dirichlet data supplied by
// edge_data at wall crossings and rim_data at circle crossings.  Second
// differences at the boundary use crossing-fraction (Shortley-Weller) legs;
// nodes whose nearest crossing lies closer than a fifth of a leg are demoted
// to data nodes carrying the boundary value at that crossing.
//
// nu is the cell average of (1 - |z|^2)^{-2} divided by psi at the node.
//
// The solve runs a fixed-matrix iteration (each sweep solves one Poisson
// problem whose right side is the convex root of the quadratic cell
// relation) until the relative residual reaches poisson_handoff, then a
// damped Newton method with a Levenberg-Marquardt safeguard to tolerance.
//
// The returned field lives on the [-1,1] grid: solved and demoted nodes are
// finite, every other node is +inf.  `initial` provides the starting guess
// at unknown nodes (callers pass the sandwich floor or a previous solution).
//
// Throws NonConvergence when no acceptable Newton step exists and
// best_iterate_on_failure is false; otherwise reports converged = false and
// returns the best iterate.
GridField solve_curvature_equation(int grid_n, const std::vector<HalfPlane>& walls,
                                   double clip_radius, const PointFunction& edge_data,
                                   const PointFunction& rim_data,
                                   const PointFunction& psi,
                                   const PointFunction& initial,
                                   const SwOptions& options = {},
                                   SwReport* report = nullptr);

// Cell average of (1 - |z|^2)^{-2} over the h-cell centered at (xc, yc),
// 3x3 Gauss-Legendre, radius clamped away from the circle.
double boundary_weight_cell_average(double xc, double yc, double h);

}  // namespace cgc
