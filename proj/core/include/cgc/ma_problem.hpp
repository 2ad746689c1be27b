#pragma once

#include <optional>
#include <vector>

#include "cgc/boundary_function.hpp"
#include "cgc/grid_field.hpp"
#include "cgc/ma_solver.hpp"
#include "cgc/planar_region.hpp"
#include "cgc/surface_mesh.hpp"

namespace cgc {

// Curvature weight psi with its stored positive bounds a <= psi <= b.
struct CurvatureSpec {
  PointFunction psi;
  double lower = 1.0;
  double upper = 1.0;
  std::optional<double> constant;  // set when psi is identically constant
};

CurvatureSpec constant_curvature(double K);
CurvatureSpec variable_curvature(PointFunction psi, double lower, double upper);

// One Dirichlet problem for the curvature equation on a convex region given
// by half-plane walls intersected with a concentric disk.
struct MAProblem {
  std::vector<HalfPlane> walls;  // interior: n.z + c > 0 for every wall
  double clip_radius = 1.0;      // interior also |z| < clip_radius
  PointFunction boundary;        // Dirichlet data at boundary crossing points
  CurvatureSpec curvature = constant_curvature(1.0);
  std::optional<PointFunction> initial;  // starting guess (default: floor)
  int grid_n = 101;
  SwOptions options{};
};

// Walls of a polygonal region (inward normals), for building MAProblems.
std::vector<HalfPlane> region_walls(const PlanarConvexRegion& region);

// Radius of the largest origin-centered disk contained in the sampled
// gradient image of u (central differences, 64 support directions).
double gradient_coverage_radius(const GridField& u);

struct SolveDiagnostics {
  double residual = 0.0;       // final level
  int poisson_iterations = 0;  // summed over levels
  int newton_iterations = 0;
  bool converged = false;  // every level reached tolerance
  double sandwich_lower_margin = 0.0;  // min of u - (conv(phi) - floor)
  double sandwich_upper_margin = 0.0;  // min of conv(phi) - u
  double coverage_radius = 0.0;        // gradient-coverage radius of u
  std::vector<double> level_differences;  // sup |u_n - u_{n-1}| on the level-1 core
  std::vector<double> level_lower_margins;  // per level, as above
  std::vector<double> level_upper_margins;
  std::vector<double> level_residuals;
  std::vector<int> level_newton_iterations;
  std::vector<int> level_converged;  // 0/1 per level
};

struct SupportSolution {
  DiskField u;                // solved region + envelope-based fill, +inf off the hull
  PlanarConvexRegion region;  // finiteness hull of phi
  BoundaryFunction phi;
  SolveDiagnostics diagnostics;
};

// Solves one Dirichlet problem.  The region must sit strictly inside the
// open disk with at least a one-cell grid margin.
// Errors: NotStrictlyInside, NonConvergence (best iterate suppressed),
// InvalidArgument (empty region, bad psi bounds).
DiskField dirichlet_solve(const MAProblem& problem, SwReport* report = nullptr);

// Exhaustion scheme: solves on domains shrunk toward the hull barycenter by
// factors 1 - 2^{-n} (corners chamfered), warm-starting each level from the
// previous one; the last level solves the full hull clipped one cell inside
// the circle with near-boundary data corrected by the local sandwich trace.
// Errors: NotRegular / WedgeDatum for degenerate data; NonConvergence.
SupportSolution exhaustion_solve(const BoundaryFunction& phi,
                                 const CurvatureSpec& curvature, int levels,
                                 int grid_n, const SwOptions& options = {});

struct ComparisonReport {
  double min_difference = 0.0;           // min over common finite nodes of u+ - u-
  double min_boundary_difference = 0.0;  // min over boundary nodes of the same
  double violation_margin = 0.0;         // min_interior - min_boundary
  bool measures_ordered = true;          // MA(u+) <= MA(u-) cellwise up to grid quantization
  double max_measure_excess = 0.0;       // worst cellwise MA(u+) - MA(u-)
};

// Maximum-principle diagnostic: where the Monge-Ampere measure of u_plus is
// cellwise dominated by that of u_minus, the difference u+ - u- attains its
// minimum on the boundary of the common finite region.
ComparisonReport comparison_check(const DiskField& u_plus, const DiskField& u_minus,
                                  int coarse_cells = 8);

struct EntirenessReport {
  double coverage_radius = 0.0;
  double barrier_violation = 0.0;  // max of u - u0 over the barrier triangle
  bool barrier_ok = false;
};

// Entireness diagnostics: gradient coverage plus the triangular-barrier
// separation test at curvature b_upper through three spread finite nodes.
// barrier_grid_n <= 0 solves the barrier problem on the solution's own grid.
EntirenessReport entireness_check(const SupportSolution& sol, double b_upper,
                                  int barrier_grid_n = 0);

struct MinkowskiResult {
  SupportSolution solution;
  SurfaceMesh mesh;
  double curvature_deviation = 0.0;  // sup |kappa/psi(G) - 1| on the mesh core
};

// End-to-end pipeline: exhaustion solve, then the graph over the square of
// half-width R with embedding samples and a curvature-consistency report.
MinkowskiResult minkowski_solve(const BoundaryFunction& phi,
                                const CurvatureSpec& curvature, double R, int grid_n,
                                int levels = 6, int mesh_n = 0,
                                const SwOptions& options = {});

}  // namespace cgc
