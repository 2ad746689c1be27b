#include <cmath>
#include <limits>

#include "cgc/barriers.hpp"
#include "cgc/errors.hpp"
#include "cgc/extended_real.hpp"
#include "cgc/minkowski.hpp"
#include "cgc/support_action.hpp"
#include "doctest.h"

using namespace cgc;

namespace {

// Max relative deviation of the finite-difference Hessian determinant of u
// from K^{-1} (1 - |z|^2)^{-2}, over interior grid nodes with |z| <= rmax
// (and optionally x >= xmin).
double ma_residual(const DiskField& u, double K, double rmax,
                   double xmin = -std::numeric_limits<double>::infinity()) {
  const double h = u.spacing();
  double worst = 0.0;
  int counted = 0;
  for (int j = 1; j + 1 < u.n; ++j) {
    for (int i = 1; i + 1 < u.n; ++i) {
      const double x = u.coord(i);
      const double y = u.coord(j);
      if (x * x + y * y > rmax * rmax || x < xmin) continue;
      bool finite = true;
      for (int dj = -1; dj <= 1 && finite; ++dj)
        for (int di = -1; di <= 1 && finite; ++di)
          finite = xr::finite(u.at(i + di, j + dj));
      if (!finite) continue;
      const double uxx = (u.at(i + 1, j) - 2 * u.at(i, j) + u.at(i - 1, j)) / (h * h);
      const double uyy = (u.at(i, j + 1) - 2 * u.at(i, j) + u.at(i, j - 1)) / (h * h);
      const double uxy = (u.at(i + 1, j + 1) - u.at(i + 1, j - 1) -
                          u.at(i - 1, j + 1) + u.at(i - 1, j - 1)) /
                         (4 * h * h);
      const double det = uxx * uyy - uxy * uxy;
      const double target = 1.0 / (K * std::pow(1.0 - x * x - y * y, 2));
      worst = std::max(worst, std::abs(det / target - 1.0));
      ++counted;
    }
  }
  REQUIRE(counted > 100);
  return worst;
}

}  // namespace

TEST_CASE("hyperboloid support values and scaling") {
  CHECK(hyperboloid_support_value(1.0, 0.0, 0.0) == doctest::Approx(-1.0));
  CHECK(hyperboloid_support_value(1.0, 0.6, 0.0) == doctest::Approx(-0.8));
  CHECK(hyperboloid_support_value(4.0, 0.6, 0.0) == doctest::Approx(-0.4));
  CHECK(!xr::finite(hyperboloid_support_value(1.0, 0.8, 0.8)));
  CHECK_THROWS_AS(hyperboloid_support_value(0.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(hyperboloid_support(-2.0, 33), Error);

  const DiskField u1 = hyperboloid_support(1.0, 101);
  const DiskField u2 = hyperboloid_support(2.0, 101);
  for (int j = 0; j < 101; ++j)
    for (int i = 0; i < 101; ++i) {
      const double a = u1.at(i, j);
      const double b = u2.at(i, j);
      if (xr::finite(a)) {
        CHECK(b == doctest::Approx(a / std::sqrt(2.0)).epsilon(1e-12));
      } else {
        CHECK(!xr::finite(b));
      }
    }
}

TEST_CASE("hyperboloid satisfies the curvature equation on the core") {
  const DiskField u = hyperboloid_support(1.0, 201);
  CHECK(ma_residual(u, 1.0, 0.85) < 5e-3);
  const DiskField u3 = hyperboloid_support(3.0, 201);
  CHECK(ma_residual(u3, 3.0, 0.85) < 5e-3);
}

TEST_CASE("canonical chord values") {
  // Chord x = 0, finite side x >= 0, curvature 1.
  CHECK(chord_barrier_value(1.0, 0.0, 0.0, 1.0, 0.0) == doctest::Approx(0.0));
  CHECK(chord_barrier_value(1.0, 0.0, 0.0, 0.5, 0.0) ==
        doctest::Approx(-0.65847894846240835).epsilon(1e-12));
  CHECK(!xr::finite(chord_barrier_value(1.0, 0.0, 0.0, -0.1, 0.0)));
  CHECK(chord_barrier_value(1.0, 0.0, 0.0, 0.0, 0.0) == 0.0);
  CHECK(chord_barrier_value(1.0, 0.0, 0.0, 0.0, 0.5) == 0.0);
  CHECK(!xr::finite(chord_barrier_value(1.0, 0.0, 0.0, 0.9, 0.9)));
  // Scaling in K.
  CHECK(chord_barrier_value(4.0, 0.0, 0.0, 0.5, 0.0) ==
        doctest::Approx(-0.65847894846240835 / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(chord_barrier_value(1.0, 0.0, 1.0, 0.2, 0.0), Error);
  CHECK_THROWS_AS(chord_barrier_value(-1.0, 0.0, 0.0, 0.2, 0.0), Error);
}

TEST_CASE("chord satisfies the curvature equation away from the chord") {
  const DiskField u = chord_barrier(1.0, 0.0, 0.0, 201);
  CHECK(ma_residual(u, 1.0, 0.85, 0.2) < 5e-3);
}

TEST_CASE("rotated chords agree with the canonical one") {
  // Normal angle pi/2 sends (x, y) -> canonical (y, -x); the canonical value
  // is even in its second argument.
  const double v = chord_barrier_value(1.0, 0.0, 0.0, 0.5, 0.3);
  CHECK(chord_barrier_value(1.0, std::numbers::pi / 2, 0.0, 0.3, 0.5) ==
        doctest::Approx(v).epsilon(1e-12));
  CHECK(chord_barrier_value(1.0, std::numbers::pi, 0.0, -0.5, 0.3) ==
        doctest::Approx(v).epsilon(1e-12));
}

TEST_CASE("offset chords vanish on the chord and reject the far side") {
  const double alpha = 0.7;
  const double offset = 0.25;
  const Vec2 nrm{std::cos(alpha), std::sin(alpha)};
  const Vec2 tang{-nrm.y, nrm.x};
  for (double t : {-0.3, 0.0, 0.3}) {
    const Vec2 z{offset * nrm.x + t * tang.x, offset * nrm.y + t * tang.y};
    const double val = chord_barrier_value(1.0, alpha, offset, z.x, z.y);
    CHECK(std::abs(val) < 1e-12);
  }
  // Far side of the chord is +inf; finite side is finite and negative.
  const Vec2 in{0.6 * nrm.x, 0.6 * nrm.y};
  const Vec2 out{-0.2 * nrm.x, -0.2 * nrm.y};
  CHECK(chord_barrier_value(1.0, alpha, offset, in.x, in.y) < 0.0);
  CHECK(!xr::finite(chord_barrier_value(1.0, alpha, offset, out.x, out.y)));
}

TEST_CASE("offset chord matches the boost action on the canonical field") {
  const DiskField canonical = chord_barrier(1.0, 0.0, 0.0, 201);
  const double offset = 0.3;
  const DiskField boosted =
      boost_support_action(canonical, -std::atanh(offset), {1.0, 0.0});
  for (const Vec2 z : {Vec2{0.55, 0.0}, Vec2{0.6, 0.2}, Vec2{0.45, -0.3},
                       Vec2{0.8, 0.1}}) {
    const double direct = chord_barrier_value(1.0, 0.0, offset, z.x, z.y);
    const double viaAction = boosted.eval(z.x, z.y);
    REQUIRE(xr::finite(direct));
    REQUIRE(xr::finite(viaAction));
    CHECK(direct == doctest::Approx(viaAction).epsilon(5e-3));
  }
}

TEST_CASE("revolution boundary slope integral") {
  // Frozen high-precision values of F(a).
  CHECK(revolution_F(0.05) == doctest::Approx(3.3792868273475612).epsilon(1e-10));
  CHECK(revolution_F(0.2) == doctest::Approx(1.9656102654927656).epsilon(1e-10));
  CHECK(revolution_F(0.5) == doctest::Approx(0.94545961993118371).epsilon(1e-10));
  CHECK(revolution_F(0.9) == doctest::Approx(0.16132655939132031).epsilon(1e-10));
  CHECK(std::abs(revolution_F(1.0)) < 1e-10);
  // Strictly decreasing in a.
  double prev = revolution_F(0.05);
  for (double a : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    const double cur = revolution_F(a);
    CHECK(cur < prev);
    prev = cur;
  }
  // The small-a growth is logarithmic: the actual ratio between a = 0.05 and
  // a = 0.5 is about 3.57, nowhere near an order of magnitude.
  CHECK(revolution_F(0.05) / revolution_F(0.5) ==
        doctest::Approx(3.574226499).epsilon(1e-6));
  CHECK_THROWS_AS(revolution_F(0.0), Error);
}

TEST_CASE("revolution support values") {
  // Diameter profile oracle at a = 0.5.
  CHECK(revolution_support_value(0.5, 1.0, 0.6, 0.0) ==
        doctest::Approx(-0.1317120287647099).epsilon(1e-9));
  // Evenness across the revolution axis plane.
  CHECK(revolution_support_value(0.5, 1.0, -0.3, 0.2) ==
        doctest::Approx(revolution_support_value(0.5, 1.0, 0.3, 0.2))
            .epsilon(1e-13));
  // Center and waist values.
  CHECK(revolution_support_value(0.5, 1.0, 0.0, 0.0) == doctest::Approx(-0.5));
  CHECK(revolution_support_value(0.5, 2.0, 0.0, 0.0) ==
        doctest::Approx(-0.5 / std::sqrt(2.0)));
  CHECK(revolution_support_value(0.5, 1.0, 0.0, 0.6) ==
        doctest::Approx(-0.5 * 0.8).epsilon(1e-12));
  // Boundary trace is F(a) |x|.
  const double F = revolution_F(0.5);
  CHECK(revolution_support_value(0.5, 1.0, 0.8, 0.6) ==
        doctest::Approx(0.8 * F).epsilon(1e-10));
  CHECK(revolution_support_value(0.5, 1.0, 0.0, 1.0) == doctest::Approx(0.0));
  // Scaling in K.
  CHECK(revolution_support_value(0.5, 4.0, 0.6, 0.0) ==
        doctest::Approx(-0.1317120287647099 / 2.0).epsilon(1e-9));
  // Outside the disk.
  CHECK(!xr::finite(revolution_support_value(0.5, 1.0, 0.9, 0.9)));
  CHECK_THROWS_AS(revolution_support_value(1.5, 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(revolution_support_value(0.5, 0.0, 0.0, 0.0), Error);
}

TEST_CASE("revolution profile is a unit-speed hyperbolic graph") {
  const RevolutionSurface surf = revolution_surface(0.5, 1.0, 121, 1.5, 101);
  const RevolutionProfile& p = surf.profile;
  REQUIRE(p.t.size() == p.g.size());
  REQUIRE(p.t.size() == p.r.size());
  CHECK(p.a == 0.5);
  CHECK(p.F == doctest::Approx(0.94545961993118371).epsilon(1e-9));
  CHECK(p.r.front() == doctest::Approx(0.5));
  for (std::size_t i = 0; i < p.t.size(); ++i) {
    // The generator is parametrized so that dg^2 - dr^2 = 1 identically.
    CHECK(p.dg[i] * p.dg[i] - p.dr[i] * p.dr[i] == doctest::Approx(1.0).epsilon(1e-10));
    if (i > 0) {
      CHECK(p.g[i] > p.g[i - 1]);
      CHECK(p.r[i] > p.r[i - 1]);
    }
  }
  // Accumulated g matches the closed-form derivative via a coarse check:
  // finite differences of g against dg at interior samples.
  for (std::size_t i = 1; i + 1 < p.t.size(); i += 37) {
    const double fd = (p.g[i + 1] - p.g[i - 1]) / (p.t[i + 1] - p.t[i - 1]);
    CHECK(fd == doctest::Approx(p.dg[i]).epsilon(1e-3));
  }
}

TEST_CASE("revolution surface embeds with the right curvature") {
  const RevolutionSurface surf = revolution_surface(0.5, 1.0, 201, 1.5, 151);
  CHECK(surf.support.at(100, 100) == doctest::Approx(-0.5));
  const SurfaceMesh& mesh = surf.mesh;
  REQUIRE(mesh.n == 151);
  int checked = 0;
  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      const double x = mesh.coord(i);
      const double y = mesh.coord(j);
      if (x * x + y * y > 0.09) continue;
      const double k = mesh.curvature[mesh.index(i, j)];
      if (!std::isfinite(k)) continue;
      CHECK(k == doctest::Approx(1.0).epsilon(0.02));
      const MinkVector nu = mesh.normal[mesh.index(i, j)];
      CHECK(minkowski_inner(nu, nu) == doctest::Approx(-1.0).epsilon(1e-9));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("trough support is a lower half-disk over a segment") {
  CHECK(trough_support_value(0.0, 0.0) == doctest::Approx(-1.0));
  CHECK(trough_support_value(0.0, 0.6) == doctest::Approx(-0.8));
  CHECK(trough_support_value(0.0, 1.0) == doctest::Approx(0.0));
  CHECK(!xr::finite(trough_support_value(0.5, 0.0)));
  CHECK(!xr::finite(trough_support_value(0.0, 1.5)));

  const DiskField u = trough_support(101);
  CHECK(u.at(50, 80) == doctest::Approx(-0.8));
  CHECK(!xr::finite(u.at(51, 80)));
  CHECK(!xr::finite(u.at(49, 80)));
  int finite_nodes = 0;
  for (int j = 0; j < u.n; ++j)
    for (int i = 0; i < u.n; ++i)
      if (xr::finite(u.at(i, j))) ++finite_nodes;
  CHECK(finite_nodes == 101);
}
