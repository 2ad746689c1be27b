#include "cgc/ma_problem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "cgc/barriers.hpp"
#include "cgc/convex_envelope.hpp"
#include "cgc/errors.hpp"
#include "cgc/ma_measure.hpp"

namespace cgc {
namespace {

double floor_value(double a, double x, double y) {
  const double r2 = x * x + y * y;
  return -std::sqrt(std::max(0.0, 1.0 - r2)) / std::sqrt(a);
}

// Globally finite convex extension of the envelope: the maximum of the
// affine functions carried by the lower-hull faces. Agrees with the
// envelope on the hull and extends it past the chords, so Dirichlet data
// stays finite at ray crossings clamped slightly outside the region.
struct ExtendedEnvelope {
  std::vector<std::array<double, 3>> planes;  // gx, gy, g0

  double operator()(double x, double y) const {
    double best = -xr::inf;
    for (const auto& p : planes) {
      best = std::max(best, p[0] * x + p[1] * y + p[2]);
    }
    return best;
  }
};

ExtendedEnvelope extend_envelope(const EnvelopeEvaluator& env) {
  ExtendedEnvelope ext;
  ext.planes.reserve(env.triangles.size());
  for (const auto& tri : env.triangles) {
    const Vec2 p0 = env.points[tri[0]];
    const Vec2 p1 = env.points[tri[1]];
    const Vec2 p2 = env.points[tri[2]];
    const double det = (p1 - p0).cross(p2 - p0);
    if (std::abs(det) < 1e-14) continue;
    const double v0 = env.values[tri[0]];
    const double v1 = env.values[tri[1]];
    const double v2 = env.values[tri[2]];
    const double gx =
        ((v1 - v0) * (p2.y - p0.y) - (v2 - v0) * (p1.y - p0.y)) / det;
    const double gy =
        ((v2 - v0) * (p1.x - p0.x) - (v1 - v0) * (p2.x - p0.x)) / det;
    ext.planes.push_back({gx, gy, v0 - gx * p0.x - gy * p0.y});
  }
  if (ext.planes.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "boundary datum hull has no nondegenerate faces");
  }
  return ext;
}

// Angular gap of the finite-node interval containing theta; the rim datum is
// "locally dense" where this gap is below a few grid cells.
struct GapIndex {
  std::vector<double> angles;  // sorted ascending in [0, 2*pi)

  double gap_at(double theta) const {
    const double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    const auto it = std::upper_bound(angles.begin(), angles.end(), theta);
    const double next = it == angles.end() ? angles.front() + two_pi : *it;
    const double prev = it == angles.begin() ? angles.back() - two_pi : *(it - 1);
    return next - prev;
  }
};

GapIndex make_gap_index(const BoundaryFunction& phi) {
  GapIndex gi;
  for (const auto& node : finite_nodes(phi)) gi.angles.push_back(node.theta);
  std::sort(gi.angles.begin(), gi.angles.end());
  return gi;
}

struct ChordLine {
  Vec2 n;          // inward unit normal
  double offset;   // chord {z . n = offset}, finite side {z . n >= offset}
  double angle;    // atan2 of n
};

std::vector<ChordLine> hull_chords(const PlanarConvexRegion& region) {
  std::vector<ChordLine> chords;
  if (region.kind != RegionKind::Polygon) return chords;
  const auto& V = region.vertices;
  const std::size_t m = V.size();
  chords.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 e = V[(i + 1) % m] - V[i];
    const Vec2 n = e.perp().normalized();
    chords.push_back({n, n.dot(V[i]), std::atan2(n.y, n.x)});
  }
  return chords;
}

// Shrinks the hull walls toward the barycenter by factor s and chamfers each
// corner with three extra walls tangent to a circle of radius rho inscribed
// at the corner, keeping every level uniformly convex at the corners.
std::vector<HalfPlane> shrunken_walls(const PlanarConvexRegion& hull,
                                      Vec2 center, double s, double rho) {
  const auto& V = hull.vertices;
  const std::size_t m = V.size();
  std::vector<Vec2> sv(m);
  for (std::size_t i = 0; i < m; ++i) sv[i] = center + s * (V[i] - center);

  std::vector<HalfPlane> walls;
  walls.reserve(4 * m);
  std::vector<Vec2> normals(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 e = sv[(i + 1) % m] - sv[i];
    normals[i] = e.perp().normalized();
    walls.push_back({normals[i], -normals[i].dot(sv[i])});
  }
  if (rho <= 0.0) return walls;
  for (std::size_t i = 0; i < m; ++i) {
    // Corner at sv[i] between the incoming edge (i-1) and outgoing edge (i).
    const Vec2 n1 = normals[(i + m - 1) % m];
    const Vec2 n2 = normals[i];
    const double det = n1.cross(n2);
    if (det < 1e-9) continue;  // straight or degenerate corner
    // Center of the inscribed circle: at distance rho of both edge lines.
    const double c1 = -n1.dot(sv[(i + m - 1) % m]);
    const double c2 = -n2.dot(sv[i]);
    const Vec2 q{(n2.y * (rho - c1) - n1.y * (rho - c2)) / det,
                 (n1.x * (rho - c2) - n2.x * (rho - c1)) / det};
    const double t1 = std::atan2(n1.y, n1.x);
    double dt = std::atan2(n2.y, n2.x) - t1;
    while (dt < 0.0) dt += 2.0 * std::numbers::pi;
    for (int k = 1; k <= 3; ++k) {
      const double t = t1 + dt * k / 4.0;
      const Vec2 nk{std::cos(t), std::sin(t)};
      walls.push_back({nk, rho - nk.dot(q)});
    }
  }
  return walls;
}

// Walls whose chord line lies outside the clip disk never bound the region;
// dropping them keeps dense polygonal hulls cheap.
std::vector<HalfPlane> active_walls(std::vector<HalfPlane> walls, double clip) {
  std::vector<HalfPlane> out;
  out.reserve(walls.size());
  for (const auto& w : walls) {
    if (-w.c < clip - 1e-12) out.push_back(w);
  }
  return out;
}

struct MarginPair {
  double lower = xr::inf;
  double upper = xr::inf;
};

MarginPair sandwich_margins(const GridField& u, const ExtendedEnvelope& ext,
                            double a) {
  MarginPair m;
  for (int j = 0; j < u.n; ++j) {
    for (int i = 0; i < u.n; ++i) {
      const double v = u.at(i, j);
      if (!xr::finite(v)) continue;
      const double x = u.coord(i);
      const double y = u.coord(j);
      const double e = ext(x, y);
      m.lower = std::min(m.lower, v - (e + floor_value(a, x, y)));
      m.upper = std::min(m.upper, e - v);
    }
  }
  return m;
}

}  // namespace

CurvatureSpec constant_curvature(double K) {
  if (!(K > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "curvature constant must be positive");
  }
  CurvatureSpec spec;
  spec.psi = [K](double, double) { return K; };
  spec.lower = K;
  spec.upper = K;
  spec.constant = K;
  return spec;
}

CurvatureSpec variable_curvature(PointFunction psi, double lower, double upper) {
  if (!(lower > 0.0) || !(upper >= lower)) {
    throw Error(ErrorCode::InvalidArgument,
                "curvature bounds must satisfy 0 < lower <= upper");
  }
  CurvatureSpec spec;
  spec.psi = std::move(psi);
  spec.lower = lower;
  spec.upper = upper;
  return spec;
}

std::vector<HalfPlane> region_walls(const PlanarConvexRegion& region) {
  std::vector<HalfPlane> walls;
  for (const auto& chord : hull_chords(region)) {
    walls.push_back({chord.n, -chord.offset});
  }
  return walls;
}

double gradient_coverage_radius(const GridField& u) {
  const int n = u.n;
  const double h = u.spacing();
  std::vector<Vec2> grads;
  for (int j = 1; j + 1 < n; ++j) {
    for (int i = 1; i + 1 < n; ++i) {
      const double e = u.at(i + 1, j), w = u.at(i - 1, j);
      const double nn = u.at(i, j + 1), ss = u.at(i, j - 1);
      if (!xr::finite(e) || !xr::finite(w) || !xr::finite(nn) || !xr::finite(ss)) {
        continue;
      }
      grads.push_back({(e - w) / (2.0 * h), (nn - ss) / (2.0 * h)});
    }
  }
  if (grads.empty()) return 0.0;
  double radius = xr::inf;
  for (int k = 0; k < 64; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 64.0;
    const Vec2 dir{std::cos(a), std::sin(a)};
    double sup = -xr::inf;
    for (const Vec2& g : grads) sup = std::max(sup, g.dot(dir));
    radius = std::min(radius, sup);
  }
  return std::max(0.0, radius);
}

DiskField dirichlet_solve(const MAProblem& problem, SwReport* report) {
  if (problem.grid_n < 5) {
    throw Error(ErrorCode::InvalidArgument, "grid must have at least 5 nodes");
  }
  if (!(problem.curvature.lower > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "curvature lower bound must be positive");
  }
  const double h = 2.0 / (problem.grid_n - 1);
  double region_max_radius = problem.clip_radius;
  if (!problem.walls.empty()) {
    const Polygon poly = clip(square_polygon(4.0), problem.walls);
    if (poly.empty()) {
      throw Error(ErrorCode::InvalidArgument, "wall intersection is empty");
    }
    double poly_max = 0.0;
    for (const Vec2& v : poly) poly_max = std::max(poly_max, v.norm());
    region_max_radius = std::min(region_max_radius, poly_max);
  }
  if (region_max_radius > 1.0 - h + 1e-12) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "region reaches radius %.6g but must stay inside %.6g (one "
                  "grid cell from the circle)",
                  region_max_radius, 1.0 - h);
    throw Error(ErrorCode::NotStrictlyInside, msg);
  }
  const double a = problem.curvature.lower;
  PointFunction init =
      problem.initial
          ? *problem.initial
          : PointFunction{[a](double x, double y) { return floor_value(a, x, y); }};
  return solve_curvature_equation(problem.grid_n, problem.walls,
                                  problem.clip_radius, problem.boundary,
                                  problem.boundary, problem.curvature.psi, init,
                                  problem.options, report);
}

SupportSolution exhaustion_solve(const BoundaryFunction& phi,
                                 const CurvatureSpec& curvature, int levels,
                                 int grid_n, const SwOptions& options) {
  validate(phi);
  switch (classify_domain(phi)) {
    case DatumClass::NotRegular:
      throw Error(ErrorCode::NotRegular,
                  "boundary datum has fewer than two finite directions");
    case DatumClass::Wedge:
      throw Error(ErrorCode::WedgeDatum,
                  "boundary datum spans a wedge (exactly two finite "
                  "directions); the limit surface degenerates");
    case DatumClass::Regular:
      break;
  }
  if (levels < 1) {
    throw Error(ErrorCode::InvalidArgument, "need at least one level");
  }
  if (grid_n < 5) {
    throw Error(ErrorCode::InvalidArgument, "grid must have at least 5 nodes");
  }
  if (!(curvature.lower > 0.0) || !(curvature.upper >= curvature.lower)) {
    throw Error(ErrorCode::InvalidArgument,
                "curvature bounds must satisfy 0 < lower <= upper");
  }

  const PlanarConvexRegion hull = finiteness_hull(phi);
  const EnvelopeEvaluator env = make_envelope_evaluator(phi);
  const ExtendedEnvelope ext = extend_envelope(env);
  const GapIndex gaps = make_gap_index(phi);
  const double a = curvature.lower;
  const double h = 2.0 / (grid_n - 1);
  const double clip = 1.0 - h;
  const double dense_gap = 4.0 * h;
  const PointFunction psi = curvature.psi;

  Vec2 center{0.0, 0.0};
  for (const Vec2& v : hull.vertices) center = center + v;
  center = center * (1.0 / static_cast<double>(hull.vertices.size()));
  const double inradius = region_inradius(hull);

  // Dirichlet data shared by every level: the extended envelope, corrected
  // by the sandwich trace -sqrt(1-r^2)/sqrt(psi) where the datum is locally
  // dense (the trace of the exact solution along dense boundary arcs).
  const PointFunction data = [ext, gaps, psi, dense_gap](double x, double y) {
    double e = ext(x, y);
    const double r2 = x * x + y * y;
    if (r2 > 1e-24 && r2 < 1.0) {
      const double theta = std::atan2(y, x);
      if (gaps.gap_at(theta) <= dense_gap) {
        e -= std::sqrt(1.0 - r2) / std::sqrt(psi(std::cos(theta), std::sin(theta)));
      }
    }
    return e;
  };

  SolveDiagnostics diag;
  diag.converged = true;
  GridField prev;
  bool have_prev = false;
  std::vector<char> core_mask;  // finite set of the level-1 solve: a fixed
                                // compact core for the Cauchy differences

  for (int level = 1; level <= levels; ++level) {
    const bool final_level = level == levels;
    std::vector<HalfPlane> walls;
    if (final_level) {
      walls = region_walls(hull);
    } else {
      const double s = 1.0 - std::pow(2.0, -level);
      const double rho = 0.2 * inradius * std::pow(2.0, -level);
      walls = shrunken_walls(hull, center, s, rho);
    }
    walls = active_walls(std::move(walls), clip);

    PointFunction init;
    if (!have_prev) {
      init = [ext, a](double x, double y) {
        return ext(x, y) + floor_value(a, x, y);
      };
    } else {
      const GridField warm = prev;
      init = [warm, ext, a](double x, double y) {
        double v = warm.eval(x, y);
        const double e = ext(x, y);
        if (!xr::finite(v)) v = e;
        return std::max(std::min(v, e), e + floor_value(a, x, y));
      };
    }

    SwReport rep;
    GridField u = solve_curvature_equation(grid_n, walls, clip, data, data, psi,
                                           init, options, &rep);
    diag.residual = rep.residual;
    diag.poisson_iterations += rep.poisson_iterations;
    diag.newton_iterations += rep.newton_iterations;
    diag.converged = diag.converged && rep.converged;
    diag.level_residuals.push_back(rep.residual);
    diag.level_newton_iterations.push_back(rep.newton_iterations);
    diag.level_converged.push_back(rep.converged ? 1 : 0);

    const MarginPair margins = sandwich_margins(u, ext, a);
    diag.level_lower_margins.push_back(margins.lower);
    diag.level_upper_margins.push_back(margins.upper);
    if (!have_prev) {
      core_mask.assign(u.v.size(), 0);
      for (std::size_t k = 0; k < u.v.size(); ++k) {
        core_mask[k] = xr::finite(u.v[k]) ? 1 : 0;
      }
    } else {
      double diff = 0.0;
      for (std::size_t k = 0; k < u.v.size(); ++k) {
        if (core_mask[k] && xr::finite(u.v[k]) && xr::finite(prev.v[k])) {
          diff = std::max(diff, std::abs(u.v[k] - prev.v[k]));
        }
      }
      diag.level_differences.push_back(diff);
    }
    prev = std::move(u);
    have_prev = true;
  }

  diag.sandwich_lower_margin = diag.level_lower_margins.back();
  diag.sandwich_upper_margin = diag.level_upper_margins.back();

  // Fill hull nodes the final solve left uncovered (the one-cell rim collar
  // and slivers at the walls) with the tightest lower estimate available:
  // envelope plus the best of the floor and the per-chord barriers.
  const std::vector<ChordLine> chords = hull_chords(hull);
  DiskField out(grid_n, 1.0);
  out.closed_convex = true;
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      const double solved = prev.at(i, j);
      if (xr::finite(solved)) {
        out.at(i, j) = solved;
        continue;
      }
      const double x = out.coord(i);
      const double y = out.coord(j);
      const double e = env(x, y);
      if (!xr::finite(e)) continue;  // off the hull: stays +inf
      double corr = floor_value(a, x, y);
      for (const auto& chord : chords) {
        const double cb = chord_barrier_value(a, chord.angle, chord.offset, x, y);
        if (xr::finite(cb)) {
          corr = std::max(corr, cb);
        } else if (chord.n.x * x + chord.n.y * y >= chord.offset - 1e-9) {
          corr = std::max(corr, 0.0);  // on the chord up to roundoff
        }
      }
      out.at(i, j) = e + std::min(corr, 0.0);
    }
  }

  diag.coverage_radius = gradient_coverage_radius(out);

  SupportSolution sol;
  sol.u = std::move(out);
  sol.region = hull;
  sol.phi = phi;
  sol.diagnostics = std::move(diag);
  return sol;
}

ComparisonReport comparison_check(const DiskField& u_plus,
                                  const DiskField& u_minus, int coarse_cells) {
  if (u_plus.n != u_minus.n || u_plus.half_width != u_minus.half_width) {
    throw Error(ErrorCode::InvalidArgument,
                "fields must share one grid for comparison");
  }
  const int n = u_plus.n;
  std::vector<char> common(static_cast<std::size_t>(n) * n, 0);
  long count = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (xr::finite(u_plus.at(i, j)) && xr::finite(u_minus.at(i, j))) {
        common[u_plus.index(i, j)] = 1;
        ++count;
      }
    }
  }
  if (count == 0) {
    throw Error(ErrorCode::InvalidArgument, "fields share no finite nodes");
  }

  ComparisonReport report;
  report.min_difference = xr::inf;
  report.min_boundary_difference = xr::inf;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!common[u_plus.index(i, j)]) continue;
      const double d = u_plus.at(i, j) - u_minus.at(i, j);
      report.min_difference = std::min(report.min_difference, d);
      const bool boundary = i == 0 || j == 0 || i == n - 1 || j == n - 1 ||
                            !common[u_plus.index(i - 1, j)] ||
                            !common[u_plus.index(i + 1, j)] ||
                            !common[u_plus.index(i, j - 1)] ||
                            !common[u_plus.index(i, j + 1)];
      if (boundary) {
        report.min_boundary_difference =
            std::min(report.min_boundary_difference, d);
      }
    }
  }
  report.violation_margin =
      report.min_difference - report.min_boundary_difference;

  // Cellwise measure comparison on a coarse partition; only cells whose
  // nodes are finite in both fields participate.
  std::vector<GridCellRange> cells;
  for (int cj = 0; cj < coarse_cells; ++cj) {
    for (int ci = 0; ci < coarse_cells; ++ci) {
      GridCellRange cell{ci * n / coarse_cells, cj * n / coarse_cells,
                         (ci + 1) * n / coarse_cells,
                         (cj + 1) * n / coarse_cells};
      bool ok = cell.i1 > cell.i0 && cell.j1 > cell.j0;
      for (int j = cell.j0; j < cell.j1 && ok; ++j) {
        for (int i = cell.i0; i < cell.i1 && ok; ++i) {
          ok = common[u_plus.index(i, j)] != 0;
        }
      }
      if (ok) cells.push_back(cell);
    }
  }
  report.max_measure_excess = -xr::inf;
  double largest_cell = 0.0;
  if (!cells.empty()) {
    const std::vector<double> mu_plus = ma_measure(u_plus, cells);
    const std::vector<double> mu_minus = ma_measure(u_minus, cells);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      report.max_measure_excess =
          std::max(report.max_measure_excess, mu_plus[k] - mu_minus[k]);
      largest_cell = std::max(largest_cell, mu_minus[k]);
    }
  }
  // Subgradient areas are quantized by the grid, so cells of two fields with
  // equal continuum measure can differ by a few percent; allow that slack
  // while still catching genuinely larger measures.
  report.measures_ordered =
      report.max_measure_excess <= 0.05 * largest_cell + 1e-8;
  return report;
}

EntirenessReport entireness_check(const SupportSolution& sol, double b_upper,
                                  int barrier_grid_n) {
  if (!(b_upper > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "curvature upper bound must be positive");
  }
  EntirenessReport report;
  report.coverage_radius = gradient_coverage_radius(sol.u);

  // Three spread finite directions: the first node plus the nodes nearest to
  // +-120 degrees from it.
  const std::vector<BoundaryNode> nodes = finite_nodes(sol.phi);
  const double base = nodes.front().theta;
  const double two_pi = 2.0 * std::numbers::pi;
  std::array<double, 3> targets{base, base + two_pi / 3.0,
                                base + 2.0 * two_pi / 3.0};
  BoundaryFunction tri_phi;
  std::vector<std::pair<double, double>> picked;  // angle, value
  for (double target : targets) {
    double best_dist = xr::inf;
    const BoundaryNode* best = nullptr;
    for (const auto& node : nodes) {
      double d = std::fmod(std::abs(node.theta - target), two_pi);
      d = std::min(d, two_pi - d);
      if (d < best_dist) {
        best_dist = d;
        best = &node;
      }
    }
    picked.emplace_back(best->theta, best->value);
  }
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  for (const auto& [theta, value] : picked) {
    tri_phi.nodes.push_back({theta, value});
  }
  if (finite_nodes(tri_phi).size() < 3 ||
      classify_domain(tri_phi) != DatumClass::Regular) {
    report.barrier_violation = xr::inf;
    report.barrier_ok = false;
    return report;
  }

  const int n0 = barrier_grid_n > 0 ? barrier_grid_n : sol.u.n;
  const double h0 = 2.0 / (n0 - 1);
  const PlanarConvexRegion tri_hull = finiteness_hull(tri_phi);
  const ExtendedEnvelope tri_ext = extend_envelope(make_envelope_evaluator(tri_phi));
  const PointFunction tri_data = [tri_ext](double x, double y) {
    return tri_ext(x, y);
  };
  const PointFunction tri_init = [tri_ext, b_upper](double x, double y) {
    return tri_ext(x, y) + floor_value(b_upper, x, y);
  };
  const PointFunction tri_psi = [b_upper](double, double) { return b_upper; };
  GridField u0;
  try {
    u0 = solve_curvature_equation(n0, region_walls(tri_hull), 1.0 - h0,
                                  tri_data, tri_data, tri_psi, tri_init);
  } catch (const Error&) {
    report.barrier_violation = xr::inf;
    report.barrier_ok = false;
    return report;
  }

  // Separation: the solution must stay below the triangular barrier solved
  // at the curvature upper bound (larger curvature, larger boundary datum).
  double violation = -xr::inf;
  bool compared = false;
  for (int j = 0; j < sol.u.n; ++j) {
    for (int i = 0; i < sol.u.n; ++i) {
      const double v = sol.u.at(i, j);
      if (!xr::finite(v)) continue;
      const double b = u0.eval(sol.u.coord(i), sol.u.coord(j));
      if (!xr::finite(b)) continue;
      violation = std::max(violation, v - b);
      compared = true;
    }
  }
  report.barrier_violation = compared ? violation : xr::inf;
  report.barrier_ok = compared && violation <= 5e-3;
  return report;
}

MinkowskiResult minkowski_solve(const BoundaryFunction& phi,
                                const CurvatureSpec& curvature, double R,
                                int grid_n, int levels, int mesh_n,
                                const SwOptions& options) {
  MinkowskiResult result;
  result.solution = exhaustion_solve(phi, curvature, levels, grid_n, options);
  result.mesh = mesh_from_support(result.solution.u, R, mesh_n);
  compute_embedding_samples(result.mesh);

  // Curvature consistency on the mesh core, by wide-stencil differences:
  // the dual heights are piecewise-affine interpolants, so unit-stride
  // second differences do not converge, but differences at a stride of a
  // few percent of the mesh do.
  const SurfaceMesh& mesh = result.mesh;
  const int w = std::max(2, (mesh.n - 1) / 25);
  const double step = w * mesh.spacing();
  double deviation = -xr::inf;
  bool seen = false;
  for (int j = w; j + w < mesh.n; ++j) {
    for (int i = w; i + w < mesh.n; ++i) {
      const double fc = mesh.height(i, j);
      const double fe = mesh.height(i + w, j), fw = mesh.height(i - w, j);
      const double fn = mesh.height(i, j + w), fs = mesh.height(i, j - w);
      const double gx = (fe - fw) / (2.0 * step);
      const double gy = (fn - fs) / (2.0 * step);
      const double g2 = gx * gx + gy * gy;
      if (g2 > 0.49) continue;  // keep the Gauss image well inside the disk
      const double fxx = (fe - 2.0 * fc + fw) / (step * step);
      const double fyy = (fn - 2.0 * fc + fs) / (step * step);
      const double fxy = (mesh.height(i + w, j + w) - mesh.height(i - w, j + w) -
                          mesh.height(i + w, j - w) + mesh.height(i - w, j - w)) /
                         (4.0 * step * step);
      const double kappa = (fxx * fyy - fxy * fxy) / ((1.0 - g2) * (1.0 - g2));
      deviation = std::max(deviation, std::abs(kappa / curvature.psi(gx, gy) - 1.0));
      seen = true;
    }
  }
  result.curvature_deviation = seen ? deviation : xr::inf;
  return result;
}

}  // namespace cgc
