#include "cgc/barriers.hpp"

#include <cmath>

#include "cgc/errors.hpp"
#include "cgc/quadrature.hpp"

namespace cgc {

namespace {

void require_positive_k(double K) {
  if (!(K > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "curvature K must be positive");
  }
}

// Canonical chord barrier (chord x = 0, finite side x >= 0) for K = 1.
// Points within rounding distance of the chord evaluate to the chord value 0
// so that transported chords report 0 on their own chord.
double canonical_chord_value(double x, double y) {
  if (x < 1e-13) {
    return (x > -1e-13 && std::abs(y) <= 1.0) ? 0.0 : xr::inf;
  }
  const double rho2 = 1.0 - y * y;
  if (x * x > rho2) return xr::inf;
  const double s2 = 1.0 - x * x / rho2;
  if (s2 <= 0.0) return 0.0;  // on the circle arc
  const double s = std::sqrt(s2);
  // log((1+s)/(1-s)) evaluated without cancellation near s = 1.
  const double lg = std::log1p(s) - std::log1p(-s);
  return -0.5 * x * lg;
}

// Integrand of the convergent part of g - r.
double gr_integrand(double a, double x) {
  const double sh = std::sinh(x);
  const double root = std::sqrt(1.0 + a * a * sh * sh);
  return 1.0 / (root + a * sh);  // == root - a*sinh(x), cancellation-free
}

// Upper integration limit where the integrand drops below 1e-13.
double tail_cutoff(double a) { return std::log(1.0 / (a * 1e-13)) + 1.0; }

// Arc parameter t of the generator with horizontal extent g(t) = X, where
// g(t) = int_0^t sqrt(1 + a^2 sinh^2). g is increasing and convex, so Newton
// started above the root (at t with a sinh t = X >= g^{-1}(X)) converges
// monotonically.
double generator_parameter(double a, double X) {
  if (X <= 0.0) return 0.0;
  auto g = [a](double t) {
    return integrate([a](double x) { return std::sqrt(1.0 + a * a * std::sinh(x) *
                                                                std::sinh(x)); },
                     0.0, t, 1e-12);
  };
  double t = std::asinh(X / a);
  for (int it = 0; it < 60; ++it) {
    const double val = g(t) - X;
    if (std::abs(val) <= 1e-12 * std::max(1.0, X)) break;
    const double sh = std::sinh(t);
    t -= val / std::sqrt(1.0 + a * a * sh * sh);
    if (t < 0.0) t = 0.0;
  }
  return t;
}

}  // namespace

double hyperboloid_support_value(double K, double x, double y) {
  require_positive_k(K);
  const double s = 1.0 - x * x - y * y;
  if (s < 0.0) return xr::inf;
  return -std::sqrt(s) / std::sqrt(K);
}

DiskField hyperboloid_support(double K, int grid_n) {
  require_positive_k(K);
  DiskField u(grid_n, 1.0);
  u.closed_convex = true;
  u.fill_from([K](double x, double y) { return hyperboloid_support_value(K, x, y); });
  return u;
}

double chord_barrier_value(double K, double normal_angle, double offset, double x,
                           double y) {
  require_positive_k(K);
  if (!(std::abs(offset) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "chord offset must lie strictly inside (-1, 1)");
  }
  if (x * x + y * y > 1.0) return xr::inf;
  // Undo the rotation that sends the canonical normal (1, 0) to the chord
  // normal, then undo the boost that carries the canonical chord x = 0 to
  // offset (the boost of rapidity eps moves the chord to x = -tanh eps).
  const double ca = std::cos(normal_angle);
  const double sa = std::sin(normal_angle);
  const double wx = ca * x + sa * y;
  const double wy = -sa * x + ca * y;
  const double eps = -std::atanh(offset);
  const double ch = std::cosh(eps);
  const double sh = std::sinh(eps);
  const double lambda = ch + wx * sh;
  const double cx = (wx * ch + sh) / lambda;
  const double cy = wy / lambda;
  return xr::scale(lambda, canonical_chord_value(cx, cy)) / std::sqrt(K);
}

DiskField chord_barrier(double K, double normal_angle, double offset, int grid_n) {
  DiskField u(grid_n, 1.0);
  u.closed_convex = true;
  u.fill_from([&](double x, double y) {
    if (x * x + y * y > 1.0) return xr::inf;
    return chord_barrier_value(K, normal_angle, offset, x, y);
  });
  return u;
}

double revolution_F(double a) {
  if (!(a > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "profile parameter a must be positive");
  }
  const double T = tail_cutoff(a);
  return integrate([a](double x) { return gr_integrand(a, x); }, 0.0, T, 1e-12) - a;
}

double revolution_support_value(double a, double K, double x, double y) {
  require_positive_k(K);
  if (!(a > 0.0) || a > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "profile parameter a must lie in (0, 1]");
  }
  const double r2 = x * x + y * y;
  if (r2 > 1.0) return xr::inf;
  const double rho2 = 1.0 - y * y;
  if (rho2 <= 0.0) return 0.0;  // poles (0, +-1)
  const double rho = std::sqrt(rho2);
  const double xi = std::abs(x) / rho;  // diameter profile is even
  double ud;
  if (xi >= 1.0 - 1e-13) {
    ud = revolution_F(a);  // boundary limit u_d(1) = F(a)
  } else {
    // Maximizer sinh t* = xi / (a sqrt(1 - xi^2)); u_d = xi g(t*) - a cosh t*.
    const double sh = xi / (a * std::sqrt(1.0 - xi * xi));
    const double ts = std::asinh(sh);
    const double T = tail_cutoff(a);
    // g(t) = integral of the convergent part + a (cosh t - 1).
    const double g0 = integrate([a](double u) { return gr_integrand(a, u); }, 0.0,
                                std::min(ts, T), 1e-12);
    const double g = g0 + a * (std::cosh(ts) - 1.0);
    ud = xi * g - a * std::cosh(ts);
  }
  return rho * ud / std::sqrt(K);
}

RevolutionSurface revolution_surface(double a, double K, int grid_n,
                                     double mesh_half_width, int mesh_n) {
  require_positive_k(K);
  if (!(a > 0.0) || a > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "profile parameter a must lie in (0, 1]");
  }
  RevolutionSurface out;
  RevolutionProfile& prof = out.profile;
  prof.a = a;
  prof.K = K;
  prof.F = revolution_F(a);
  const int samples = 801;
  const double t_max = 8.0;
  prof.t.resize(samples);
  prof.g.resize(samples);
  prof.r.resize(samples);
  prof.dg.resize(samples);
  prof.dr.resize(samples);
  double g_acc = 0.0;
  double t_prev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = t_max * i / (samples - 1);
    if (i > 0) {
      g_acc += integrate(
          [a](double x) { return std::sqrt(1.0 + a * a * std::sinh(x) * std::sinh(x)); },
          t_prev, t, 1e-13);
    }
    const double sh = std::sinh(t);
    prof.t[i] = t;
    prof.g[i] = g_acc;
    prof.r[i] = a * std::cosh(t);
    prof.dg[i] = std::sqrt(1.0 + a * a * sh * sh);
    prof.dr[i] = a * sh;
    t_prev = t;
  }

  out.support = DiskField(grid_n, 1.0);
  out.support.closed_convex = true;
  out.support.fill_from([&](double x, double y) {
    if (x * x + y * y > 1.0) return xr::inf;
    return revolution_support_value(a, K, x, y);
  });
  // The surface is the orbit of the generator (g(t), 0, r(t)) under boosts
  // about the first axis, i.e. the graph of f(x, y) = hypot(r(t(x)), y) with
  // g(t(x)) = |x| at curvature 1, rescaled by 1/sqrt(K).
  const double rootK = std::sqrt(K);
  out.mesh = mesh_from(mesh_n, mesh_half_width, [&](double x, double y) {
    const double t = generator_parameter(a, rootK * std::abs(x));
    return std::hypot(a * std::cosh(t) / rootK, y);
  });
  compute_embedding_samples(out.mesh);
  return out;
}

double trough_support_value(double x, double y) {
  // Finite only on the vertical diameter; tolerate rounding in grid coords.
  if (std::abs(x) > 1e-12 || std::abs(y) > 1.0) return xr::inf;
  return -std::sqrt(1.0 - y * y);
}

DiskField trough_support(int grid_n) {
  DiskField u(grid_n, 1.0);
  u.closed_convex = true;
  u.fill_from(trough_support_value);
  return u;
}

}  // namespace cgc
