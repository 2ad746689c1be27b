#include "cgc/ma_solver.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "cgc/errors.hpp"
#include "cgc/extended_real.hpp"

namespace cgc {

double boundary_weight_cell_average(double xc, double yc, double h) {
  static const double gn[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static const double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double x = xc + 0.5 * h * gn[a];
      const double y = yc + 0.5 * h * gn[b];
      double r2 = x * x + y * y;
      r2 = std::min(r2, 1.0 - 1e-10);
      sum += gw[a] * gw[b] / 4.0 / ((1.0 - r2) * (1.0 - r2));
    }
  }
  return sum;
}

namespace {

constexpr double kThetaMin = 0.2;
constexpr double kPosEps = 1e-14;

// Smallest t > 0 at which p + t d leaves the region (unit direction d).
// Returns {t, which}: which >= 0 names the wall, -2 the clip circle.
struct RayExit {
  double t = std::numeric_limits<double>::infinity();
  int which = -1;
};

RayExit ray_exit(double px, double py, double dx, double dy,
                 const std::vector<HalfPlane>& walls, double r_clip) {
  RayExit out;
  for (std::size_t k = 0; k < walls.size(); ++k) {
    const HalfPlane& w = walls[k];
    const double dn = w.n.x * dx + w.n.y * dy;
    if (dn < 0.0) {
      const double tk = -(w.n.x * px + w.n.y * py + w.c) / dn;
      if (tk >= 0.0 && tk < out.t) {
        out.t = tk;
        out.which = static_cast<int>(k);
      }
    }
  }
  const double b = 2.0 * (px * dx + py * dy);
  const double c0 = px * px + py * py - r_clip * r_clip;
  const double disc = b * b - 4.0 * c0;
  if (disc >= 0.0) {
    const double tk = (-b + std::sqrt(disc)) / 2.0;
    if (tk >= 0.0 && tk < out.t) {
      out.t = tk;
      out.which = -2;
    }
  }
  return out;
}

// Frozen discretization of one Dirichlet subproblem.
struct Setup {
  int N = 0;
  double h = 0.0;
  double r_clip = 0.0;
  std::vector<int> node_i, node_j;      // unknown -> grid indices
  std::array<std::vector<int>, 8> nbr;  // unknown index or -1
  std::array<std::vector<double>, 8> theta;
  std::array<std::vector<double>, 8> bval;
  std::vector<double> nu;
  std::vector<std::pair<int, double>> demoted;  // flat grid id -> data value
  int n() const { return static_cast<int>(node_i.size()); }
};

constexpr int kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                             {1, 1}, {-1, -1}, {-1, 1}, {1, -1}};

Setup build_setup(int N, const std::vector<HalfPlane>& walls, double clip_radius,
                  const PointFunction& edge_data, const PointFunction& rim_data,
                  const PointFunction& psi) {
  Setup s;
  s.N = N;
  s.h = 2.0 / (N - 1);
  s.r_clip = std::min(clip_radius, 1.0 - s.h);
  auto coord = [&](int i) { return -1.0 + i * s.h; };

  auto inside = [&](int i, int j) {
    if (i <= 0 || j <= 0 || i >= N - 1 || j >= N - 1) return false;
    const double x = coord(i);
    const double y = coord(j);
    if (x * x + y * y >= s.r_clip * s.r_clip) return false;
    for (const HalfPlane& w : walls) {
      if (!(w.n.x * x + w.n.y * y + w.c > 0.0)) return false;
    }
    return true;
  };

  std::vector<char> ins(static_cast<std::size_t>(N) * N, 0);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) ins[static_cast<std::size_t>(j) * N + i] = inside(i, j);

  auto data_at = [&](double cx, double cy, int which) {
    return which >= 0 ? edge_data(cx, cy) : rim_data(cx, cy);
  };

  // Demote nodes whose nearest boundary crossing is closer than a fifth of a
  // leg: they become data nodes carrying the value at that crossing.
  std::vector<double> demoted_value(static_cast<std::size_t>(N) * N, 0.0);
  std::vector<char> is_demoted(static_cast<std::size_t>(N) * N, 0);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      if (!ins[static_cast<std::size_t>(j) * N + i]) continue;
      const double px = coord(i);
      const double py = coord(j);
      double worst = std::numeric_limits<double>::infinity();
      double wx = 0.0, wy = 0.0;
      int wwhich = -1;
      for (const auto& d : kDirs) {
        if (ins[static_cast<std::size_t>(j + d[1]) * N + (i + d[0])]) continue;
        const double len = std::hypot(static_cast<double>(d[0]), static_cast<double>(d[1]));
        const double leg = s.h * len;
        const double dx = d[0] / len;
        const double dy = d[1] / len;
        const RayExit ex = ray_exit(px, py, dx, dy, walls, s.r_clip);
        if (ex.t / leg < worst) {
          worst = ex.t / leg;
          wx = px + ex.t * dx;
          wy = py + ex.t * dy;
          wwhich = ex.which;
        }
      }
      if (worst < kThetaMin) {
        is_demoted[static_cast<std::size_t>(j) * N + i] = 1;
        demoted_value[static_cast<std::size_t>(j) * N + i] = data_at(wx, wy, wwhich);
      }
    }
  }

  std::vector<int> index(static_cast<std::size_t>(N) * N, -1);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const std::size_t id = static_cast<std::size_t>(j) * N + i;
      if (ins[id] && !is_demoted[id]) {
        index[id] = s.n();
        s.node_i.push_back(i);
        s.node_j.push_back(j);
      }
      if (is_demoted[id]) s.demoted.emplace_back(static_cast<int>(id), demoted_value[id]);
    }
  }

  const int n = s.n();
  for (int l = 0; l < 8; ++l) {
    s.nbr[l].assign(n, -1);
    s.theta[l].assign(n, 1.0);
    s.bval[l].assign(n, 0.0);
  }
  s.nu.resize(n);
  for (int k = 0; k < n; ++k) {
    const int i = s.node_i[k];
    const int j = s.node_j[k];
    const double px = coord(i);
    const double py = coord(j);
    for (int l = 0; l < 8; ++l) {
      const int qi = i + kDirs[l][0];
      const int qj = j + kDirs[l][1];
      const std::size_t qid = static_cast<std::size_t>(qj) * N + qi;
      if (index[qid] >= 0) {
        s.nbr[l][k] = index[qid];
        continue;
      }
      if (is_demoted[qid]) {
        s.bval[l][k] = demoted_value[qid];  // theta stays 1
        continue;
      }
      const double len =
          std::hypot(static_cast<double>(kDirs[l][0]), static_cast<double>(kDirs[l][1]));
      const double leg = s.h * len;
      const double dx = kDirs[l][0] / len;
      const double dy = kDirs[l][1] / len;
      const RayExit ex = ray_exit(px, py, dx, dy, walls, s.r_clip);
      double th = std::min(ex.t / leg, 1.0);
      th = std::max(th, kThetaMin);
      s.theta[l][k] = th;
      s.bval[l][k] = data_at(px + th * leg * dx, py + th * leg * dy, ex.which);
    }
    s.nu[k] = boundary_weight_cell_average(px, py, s.h) / psi(px, py);
  }
  return s;
}

struct PairWeights {
  int la, lb;
  std::vector<double> wa, wb, wp;
};

std::array<PairWeights, 4> pair_weights(const Setup& s) {
  const double sq2 = std::sqrt(2.0);
  const int legs[4][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  const double span[4] = {s.h, s.h, s.h * sq2, s.h * sq2};
  std::array<PairWeights, 4> W;
  const int n = s.n();
  for (int p = 0; p < 4; ++p) {
    W[p].la = legs[p][0];
    W[p].lb = legs[p][1];
    W[p].wa.resize(n);
    W[p].wb.resize(n);
    W[p].wp.resize(n);
    const double s2 = span[p] * span[p];
    for (int k = 0; k < n; ++k) {
      const double ta = s.theta[W[p].la][k];
      const double tb = s.theta[W[p].lb][k];
      W[p].wa[k] = 2.0 / (ta * (ta + tb)) / s2;
      W[p].wb[k] = 2.0 / (tb * (ta + tb)) / s2;
      W[p].wp[k] = -2.0 / (ta * tb) / s2;
    }
  }
  return W;
}

// Generalized second difference along pair p at every unknown.
void second_diff(const Setup& s, const PairWeights& w, const std::vector<double>& u,
                 std::vector<double>& out) {
  const int n = s.n();
  out.resize(n);
  for (int k = 0; k < n; ++k) {
    const int na = s.nbr[w.la][k];
    const int nb = s.nbr[w.lb][k];
    const double va = na >= 0 ? u[na] : s.bval[w.la][k];
    const double vb = nb >= 0 ? u[nb] : s.bval[w.lb][k];
    out[k] = w.wa[k] * va + w.wb[k] * vb + w.wp[k] * u[k];
  }
}

double max_rel_residual(const std::vector<double>& F, const std::vector<double>& nu) {
  double r = 0.0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    r = std::max(r, std::abs(F[k]) / std::max(nu[k], 1.0));
  }
  return r;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

GridField solve_curvature_equation(int grid_n, const std::vector<HalfPlane>& walls,
                                   double clip_radius, const PointFunction& edge_data,
                                   const PointFunction& rim_data,
                                   const PointFunction& psi,
                                   const PointFunction& initial,
                                   const SwOptions& options, SwReport* report) {
  if (grid_n < 5) throw Error(ErrorCode::InvalidArgument, "grid too coarse to solve on");
  Setup s = build_setup(grid_n, walls, clip_radius, edge_data, rim_data, psi);
  const int n = s.n();
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "region contains no interior grid nodes at this resolution");
  }
  const auto W = pair_weights(s);
  auto coord = [&](int i) { return -1.0 + i * s.h; };

  std::vector<double> u(n);
  for (int k = 0; k < n; ++k) u[k] = initial(coord(s.node_i[k]), coord(s.node_j[k]));

  std::vector<double> A, B, S1, S2, F(n);
  auto raw_residual = [&](const std::vector<double>& v) {
    second_diff(s, W[0], v, A);
    second_diff(s, W[1], v, B);
    second_diff(s, W[2], v, S1);
    second_diff(s, W[3], v, S2);
    for (int k = 0; k < n; ++k) {
      const double C = 0.5 * (S1[k] - S2[k]);
      F[k] = A[k] * B[k] - C * C - s.nu[k];
    }
  };

  SwReport rep;
  rep.unknowns = n;

  // Phase 1 machinery: fixed-matrix globalizer.  The convex root of the cell
  // relation A*B - C^2 = nu with trace A + B fixed satisfies
  //   A + B = sqrt((A - B)^2 + 4 C^2 + 4 nu),
  // so each sweep solves one Poisson problem with the prefactored axis-pair
  // Laplacian.
  Eigen::SparseLU<Eigen::SparseMatrix<double>> laplace;
  std::vector<double> gconst(n, 0.0);
  {
    Eigen::SparseMatrix<double> L(n, n);
    std::vector<Eigen::Triplet<double>> trips;
    std::vector<double> diag(n, 0.0);
    for (int p = 0; p < 2; ++p) {
      for (int k = 0; k < n; ++k) diag[k] += W[p].wp[k];
      for (int side = 0; side < 2; ++side) {
        const int leg = side == 0 ? W[p].la : W[p].lb;
        const std::vector<double>& w = side == 0 ? W[p].wa : W[p].wb;
        for (int k = 0; k < n; ++k) {
          if (s.nbr[leg][k] >= 0) {
            trips.emplace_back(k, s.nbr[leg][k], w[k]);
          } else {
            gconst[k] += w[k] * s.bval[leg][k];
          }
        }
      }
    }
    for (int k = 0; k < n; ++k) trips.emplace_back(k, k, diag[k]);
    L.setFromTriplets(trips.begin(), trips.end());
    laplace.compute(L);
    if (laplace.info() != Eigen::Success) {
      throw Error(ErrorCode::NonConvergence, "globalizer matrix factorization failed");
    }
  }
  int poisson_budget = options.max_poisson;
  auto poisson_to = [&](double target) {
    Eigen::VectorXd rhs(n);
    while (poisson_budget > 0) {
      raw_residual(u);
      if (max_rel_residual(F, s.nu) < target) break;
      for (int k = 0; k < n; ++k) {
        const double C = 0.5 * (S1[k] - S2[k]);
        const double d = A[k] - B[k];
        rhs[k] = std::sqrt(d * d + 4.0 * C * C + 4.0 * s.nu[k]) - gconst[k];
      }
      Eigen::VectorXd unew = laplace.solve(rhs);
      for (int k = 0; k < n; ++k) u[k] = unew[k];
      ++rep.poisson_iterations;
      --poisson_budget;
    }
  };

  // Phase 2 machinery: damped Newton with a Levenberg-Marquardt safeguard on
  // the convexified residual pos(A) pos(B) - C^2 - nu.
  const auto pos = [](double x) { return std::max(x, kPosEps); };
  const auto dpos = [](double x) { return x > kPosEps ? 1.0 : 0.0; };
  std::vector<double> Ft(n), ut(n);
  auto conv_residual = [&](const std::vector<double>& v, std::vector<double>& out) {
    second_diff(s, W[0], v, A);
    second_diff(s, W[1], v, B);
    second_diff(s, W[2], v, S1);
    second_diff(s, W[3], v, S2);
    out.resize(n);
    for (int k = 0; k < n; ++k) {
      const double C = 0.5 * (S1[k] - S2[k]);
      out[k] = pos(A[k]) * pos(B[k]) - C * C - s.nu[k];
    }
  };

  Eigen::SparseMatrix<double> I(n, n);
  I.setIdentity();
  std::vector<double> C(n), cf[4];
  auto newton = [&]() {
    double mu = 0.0;
    for (int it = 0; it < options.max_newton; ++it) {
      conv_residual(u, F);
      if (max_rel_residual(F, s.nu) < options.tol) return;
      ++rep.newton_iterations;
      for (int k = 0; k < n; ++k) C[k] = 0.5 * (S1[k] - S2[k]);
      for (int p = 0; p < 4; ++p) cf[p].resize(n);
      for (int k = 0; k < n; ++k) {
        cf[0][k] = pos(B[k]) * dpos(A[k]);
        cf[1][k] = pos(A[k]) * dpos(B[k]);
        cf[2][k] = -C[k];
        cf[3][k] = C[k];
      }
      std::vector<Eigen::Triplet<double>> trips;
      std::vector<double> diag(n, 0.0);
      for (int p = 0; p < 4; ++p) {
        for (int k = 0; k < n; ++k) diag[k] += cf[p][k] * W[p].wp[k];
        for (int side = 0; side < 2; ++side) {
          const int leg = side == 0 ? W[p].la : W[p].lb;
          const std::vector<double>& w = side == 0 ? W[p].wa : W[p].wb;
          for (int k = 0; k < n; ++k) {
            if (s.nbr[leg][k] >= 0) trips.emplace_back(k, s.nbr[leg][k], cf[p][k] * w[k]);
          }
        }
      }
      for (int k = 0; k < n; ++k) trips.emplace_back(k, k, diag[k]);
      Eigen::SparseMatrix<double> J(n, n);
      J.setFromTriplets(trips.begin(), trips.end());

      std::vector<double> absdiag(diag);
      for (double& d : absdiag) d = std::abs(d);
      std::nth_element(absdiag.begin(), absdiag.begin() + n / 2, absdiag.end());
      const double mu0 = 1e-10 * absdiag[n / 2];

      const double f0 = norm2(F);
      bool accepted = false;
      while (mu <= 1e14 * std::max(mu0, 1e-300)) {
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        if (mu > 0.0) {
          Eigen::SparseMatrix<double> Jm = J + mu * I;
          lu.compute(Jm);
        } else {
          lu.compute(J);
        }
        if (lu.info() != Eigen::Success) {
          mu = std::max(10.0 * mu, mu0);
          continue;
        }
        Eigen::VectorXd rhs(n);
        for (int k = 0; k < n; ++k) rhs[k] = -F[k];
        Eigen::VectorXd d = lu.solve(rhs);
        bool finite = true;
        for (int k = 0; k < n && finite; ++k) finite = std::isfinite(d[k]);
        if (!finite) {
          mu = std::max(10.0 * mu, mu0);
          continue;
        }
        double lam = 1.0;
        for (int ls = 0; ls < 12; ++ls) {
          for (int k = 0; k < n; ++k) ut[k] = u[k] + lam * d[k];
          conv_residual(ut, Ft);
          if (norm2(Ft) < (1.0 - 1e-4 * lam) * f0) {
            u = ut;
            accepted = true;
            break;
          }
          lam *= 0.5;
        }
        if (accepted) {
          mu /= 3.0;
          if (mu < mu0) mu = 0.0;
          break;
        }
        mu = std::max(10.0 * mu, mu0);
      }
      if (!accepted) return;  // LM stalled; the caller may retry after smoothing
    }
  };

  // Alternate the phases.  Newton occasionally stalls in a local minimum of
  // the least-squares residual when handed a state the globalizer has not
  // smoothed (warm starts land there directly), so each retry demands a
  // tenfold smaller handoff residual before trying again.
  double r = xr::inf;
  std::vector<double> best_u = u;
  double best_r = xr::inf;
  double handoff = options.poisson_handoff;
  for (int round = 0; round < 3; ++round) {
    poisson_to(handoff);
    newton();
    conv_residual(u, F);
    r = max_rel_residual(F, s.nu);
    if (r < best_r) {
      best_r = r;
      best_u = u;
    }
    if (r < options.tol) break;
    handoff *= 0.1;
  }
  if (best_r < r) {
    u = best_u;
    r = best_r;
  }
  rep.residual = r;
  rep.converged = r < options.tol;
  if (report != nullptr) *report = rep;
  if (!rep.converged && !options.best_iterate_on_failure) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "curvature solve stopped at relative residual %.3e (tol %.1e)",
                  r, options.tol);
    throw Error(ErrorCode::NonConvergence, msg);
  }

  GridField out(grid_n, 1.0);
  out.closed_convex = true;
  for (int k = 0; k < n; ++k) {
    out.v[static_cast<std::size_t>(s.node_j[k]) * grid_n + s.node_i[k]] = u[k];
  }
  for (const auto& [id, val] : s.demoted) out.v[id] = val;
  return out;
}

}  // namespace cgc
