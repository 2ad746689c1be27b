#include <cmath>

#include "cgc/boundary_function.hpp"
#include "cgc/convex_envelope.hpp"
#include "cgc/errors.hpp"
#include "cgc/grid_field.hpp"
#include "cgc/io.hpp"
#include "cgc/legendre.hpp"
#include "cgc/ma_measure.hpp"
#include "cgc/planar_region.hpp"
#include "cgc/surface_mesh.hpp"
#include "doctest.h"

using namespace cgc;

namespace {

DiskField hyperboloid_support(int n, double k = 1.0) {
  return disk_field_from(n, [k](double x, double y) {
    const double s = 1.0 - x * x - y * y;
    return -std::sqrt(s > 0.0 ? s : 0.0) / std::sqrt(k);
  });
}

}  // namespace

TEST_CASE("grid field bilinear evaluation propagates +inf per cell") {
  GridField g(3, 1.0, 0.0);
  g.at(2, 2) = xr::inf;  // node (1, 1)
  CHECK(g.eval(-0.25, -0.25) == doctest::Approx(0.0));  // all corners finite
  CHECK(g.eval(0.25, 0.25) == xr::inf);                 // cell owns the +inf corner
  CHECK(g.eval(1.5, 0.0) == xr::inf);                   // outside the square
}

TEST_CASE("legendre transform of the euclidean norm is the disk indicator") {
  GridField f(161, 4.0, 0.0);
  f.fill_from([](double x, double y) { return std::hypot(x, y); });
  const GridField dual = legendre_transform(f, 81, 2.0);
  // Inside the unit disk the dual vanishes (up to sampling resolution).
  for (double r : {0.0, 0.3, 0.6, 0.9}) {
    CHECK(std::abs(dual.eval(r, 0.0)) <= 5e-2);
  }
  // Outside it grows linearly with the sampling half-width.
  CHECK(dual.eval(1.5, 0.0) >= 1.9);
}

TEST_CASE("legendre transform of the hyperboloid support is the hyperboloid graph") {
  const DiskField u = hyperboloid_support(201);
  const GridField dual = legendre_transform(u, 121, 3.0);
  double worst = 0.0;
  for (int j = 0; j < dual.n; ++j) {
    for (int i = 0; i < dual.n; ++i) {
      const double x = dual.coord(i);
      const double y = dual.coord(j);
      const double exact = std::sqrt(1.0 + x * x + y * y);
      worst = std::max(worst, std::abs(dual.at(i, j) - exact));
    }
  }
  CHECK(worst <= 5e-3);
}

TEST_CASE("legendre transform of an affine function concentrates at its slope") {
  const Vec2 c{0.25, -0.4};
  const double d = 0.7;
  const DiskField f =
      disk_field_from(201, [&](double x, double y) { return c.x * x + c.y * y + d; });
  const GridField dual = legendre_transform(f, 161, 1.0);
  CHECK(dual.eval(c.x, c.y) == doctest::Approx(-d).epsilon(1e-3));
  // Away from the slope the dual grows like distance to c (support of the disk).
  CHECK(dual.eval(0.25, 0.6) == doctest::Approx(-d + 1.0).epsilon(2e-2));
}

TEST_CASE("legendre transform rejects an everywhere-infinite field") {
  GridField f(33, 1.0);  // all +inf
  CHECK_THROWS_AS(legendre_transform(f, 33, 1.0), Error);
}

TEST_CASE("legendre involution returns the original field") {
  // Hyperboloid support: exact away from the rim (where the true gradient
  // exceeds the dual sampling half-width of 6).
  const DiskField u = hyperboloid_support(201);
  const GridField dual = legendre_transform(u, 201, 6.0);
  const GridField back = legendre_transform(dual, 201, 1.0);
  double worst = 0.0;
  for (int j = 0; j < u.n; ++j) {
    for (int i = 0; i < u.n; ++i) {
      const double x = u.coord(i);
      const double y = u.coord(j);
      if (x * x + y * y > 0.95 * 0.95) continue;
      worst = std::max(worst, std::abs(back.at(i, j) - u.at(i, j)));
    }
  }
  CHECK(worst <= 5e-3);

  // Max-of-affine field with slopes inside the dual range: involution exact
  // up to dual grid resolution.
  const DiskField m = disk_field_from(201, [](double x, double y) {
    return std::max({2.0 * x - 0.5, -1.5 * y, 0.25 * x + 0.25 * y - 1.0});
  });
  const GridField mdual = legendre_transform(m, 241, 6.0);
  const GridField mback = legendre_transform(mdual, 201, 1.0);
  double mworst = 0.0;
  for (int j = 0; j < m.n; ++j) {
    for (int i = 0; i < m.n; ++i) {
      if (!xr::finite(m.at(i, j))) continue;
      mworst = std::max(mworst, std::abs(mback.at(i, j) - m.at(i, j)));
    }
  }
  CHECK(mworst <= 2e-2);
}

TEST_CASE("support of the hyperboloid mesh") {
  const SurfaceMesh mesh = mesh_from(
      401, 20.0, [](double x, double y) { return std::sqrt(1.0 + x * x + y * y); });
  const DiskField u = support_of_mesh(mesh, 101);
  CHECK(u.at(50, 50) == doctest::Approx(-1.0));  // node at the origin
  CHECK(u.eval(0.6, 0.0) == doctest::Approx(-0.8).epsilon(1e-2));
  // Outside the closed disk the support field is +inf by convention.
  CHECK(u.at(0, 0) == xr::inf);
}

TEST_CASE("support of the trough mesh diverges off its chord") {
  const SurfaceMesh mesh =
      mesh_from(401, 20.0, [](double, double y) { return std::sqrt(1.0 + y * y); });
  const DiskField u = support_of_mesh(mesh, 101);
  // On the chord x = 0 the support matches the lower hyperbola.
  CHECK(u.eval(0.0, 0.6) == doctest::Approx(-0.8).epsilon(1e-2));
  // Off the chord the value grows with the sampling half-width R = 20.
  CHECK(u.eval(0.5, 0.0) == doctest::Approx(0.5 * 20.0 - 1.0).epsilon(1e-2));
}

TEST_CASE("translating a mesh in time shifts its support") {
  const SurfaceMesh base = mesh_from(
      201, 10.0, [](double x, double y) { return std::sqrt(1.0 + x * x + y * y); });
  SurfaceMesh shifted = base;
  for (double& h : shifted.f) h += 0.75;
  const DiskField u0 = support_of_mesh(base, 81);
  const DiskField u1 = support_of_mesh(shifted, 81);
  const FieldDifference diff = field_difference(u0, u1);
  CHECK(diff.mismatched_nodes == 0);
  for (int j = 0; j < u0.n; ++j) {
    for (int i = 0; i < u0.n; ++i) {
      if (xr::finite(u0.at(i, j))) {
        CHECK(u1.at(i, j) == doctest::Approx(u0.at(i, j) - 0.75));
      }
    }
  }
}

TEST_CASE("mesh from support inverts the hyperboloid family") {
  for (double k : {1.0, 2.0}) {
    const DiskField u = hyperboloid_support(201, k);
    const SurfaceMesh mesh = mesh_from_support(u, 2.0, 101);
    double worst = 0.0;
    for (int j = 0; j < mesh.n; ++j) {
      for (int i = 0; i < mesh.n; ++i) {
        const double x = mesh.coord(i);
        const double y = mesh.coord(j);
        const double exact = std::sqrt(1.0 + k * (x * x + y * y)) / std::sqrt(k);
        worst = std::max(worst, std::abs(mesh.height(i, j) - exact));
      }
    }
    CHECK(worst <= 5e-3);
    CHECK(max_edge_slope(mesh) < 1.0);
  }
}

TEST_CASE("mesh from support rejects affine support functions") {
  const DiskField u =
      disk_field_from(101, [](double x, double y) { return 0.3 * x - 0.1 * y; });
  CHECK_THROWS_AS(mesh_from_support(u, 1.0, 51), Error);
}

TEST_CASE("mesh curvature samples recover the curvature of the hyperboloid") {
  for (double k : {1.0, 2.0}) {
    SurfaceMesh mesh = mesh_from(201, 2.0, [k](double x, double y) {
      return std::sqrt(1.0 + k * (x * x + y * y)) / std::sqrt(k);
    });
    compute_embedding_samples(mesh);
    double worst = 0.0;
    for (int j = 1; j < mesh.n - 1; ++j) {
      for (int i = 1; i < mesh.n - 1; ++i) {
        worst = std::max(worst, std::abs(mesh.curvature[mesh.index(i, j)] - k));
      }
    }
    CHECK(worst <= 5e-3 * k);
    // Normals are future unit timelike.
    const MinkVector nu = mesh.normal[mesh.index(100, 100)];
    CHECK(minkowski_inner(nu, nu) == doctest::Approx(-1.0));
    CHECK(nu.x3 > 0.0);
  }
}

TEST_CASE("support of mesh_from_support touches the input from below") {
  const DiskField u = hyperboloid_support(151);
  double prev_gap = xr::inf;
  for (double r : {1.0, 2.0, 4.0}) {
    const SurfaceMesh mesh = mesh_from_support(u, r, 201);
    const DiskField back = support_of_mesh(mesh, 151);
    double gap = 0.0;
    for (int j = 0; j < u.n; ++j) {
      for (int i = 0; i < u.n; ++i) {
        if (!xr::finite(u.at(i, j)) || !xr::finite(back.at(i, j))) continue;
        gap = std::max(gap, u.at(i, j) - back.at(i, j));
        // Lower bound property, up to resampling slack.
        CHECK(back.at(i, j) <= u.at(i, j) + 1e-9);
      }
    }
    CHECK(gap <= prev_gap + 1e-12);
    prev_gap = gap;
  }
}

TEST_CASE("boundary function validation and classification") {
  BoundaryFunction phi;
  phi.nodes = {{0.0, 0.0}, {2.0, 1.0}, {4.0, xr::inf}};
  CHECK_NOTHROW(validate(phi));
  CHECK(classify_domain(phi) == DatumClass::Wedge);
  phi.nodes.push_back({5.0, -0.5});
  CHECK(classify_domain(phi) == DatumClass::Regular);
  BoundaryFunction bad;
  bad.nodes = {{1.0, xr::inf}};
  CHECK_THROWS_AS(validate(bad), Error);
  BoundaryFunction unordered;
  unordered.nodes = {{2.0, 0.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(validate(unordered), Error);
}

TEST_CASE("domain membership for the cone and the wedge") {
  // Dense zero datum: the domain of dependence is the future cone over 0.
  BoundaryFunction cone;
  for (int k = 0; k < 64; ++k) {
    cone.nodes.push_back({2.0 * 3.14159265358979312 * k / 64.0, 0.0});
  }
  CHECK(domain_membership(cone, {0, 0, 1}));
  CHECK_FALSE(domain_membership(cone, {0, 0, -1}));
  // Monotone in the future direction.
  CHECK(domain_membership(cone, {0.2, -0.1, 0.9}));
  CHECK(domain_membership(cone, {0.2, -0.1, 2.9}));

  BoundaryFunction wedge;
  wedge.nodes = {{0.0, 0.0}, {3.14159265358979312, 0.0}};
  for (double t : {0.5, 1.0, 8.0}) {
    CHECK(domain_membership(wedge, {0, 0, t}));
  }
  BoundaryFunction lone;
  lone.nodes = {{0.0, 0.0}};
  CHECK_THROWS_AS(domain_membership(lone, {0, 0, 1}), Error);
}

TEST_CASE("finiteness hull kinds and inradius") {
  BoundaryFunction tri;
  tri.nodes = {{0.0, 0.0}, {2.0943951023931953, 0.0}, {4.1887902047863905, 0.0}};
  const PlanarConvexRegion hull = finiteness_hull(tri);
  CHECK(hull.kind == RegionKind::Polygon);
  CHECK(hull.vertices.size() == 3);
  // Equilateral triangle inscribed in the unit circle has inradius 1/2.
  CHECK(region_inradius(hull) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(region_contains(hull, {0.0, 0.0}));
  CHECK_FALSE(region_contains(hull, {-0.9, 0.0}));

  BoundaryFunction two;
  two.nodes = {{0.0, 0.0}, {3.0, 0.0}};
  CHECK(finiteness_hull(two).kind == RegionKind::Segment);
  BoundaryFunction one;
  one.nodes = {{0.5, 1.0}};
  CHECK(finiteness_hull(one).kind == RegionKind::Empty);
}

TEST_CASE("field csv round trip") {
  const DiskField u = hyperboloid_support(33);
  const std::string path = "field_roundtrip_test.csv";
  write_field_csv(path, u);
  const GridField back = read_field_csv(path);
  CHECK(back.n == u.n);
  CHECK(back.half_width == doctest::Approx(1.0));
  const FieldDifference diff = field_difference(u, back);
  CHECK(diff.max_abs == 0.0);
  CHECK(diff.mismatched_nodes == 0);
}

TEST_CASE("second difference and midpoint convexity checks") {
  const DiskField u = hyperboloid_support(101);
  CHECK(min_second_difference(u) >= -1e-12);
  CHECK(finite_set_midpoint_convex(u));
  DiskField bumpy = u;
  bumpy.at(50, 50) = 1.0;  // spike breaks convexity
  CHECK(min_second_difference(bumpy) < -0.5);
}

TEST_CASE("convex envelope of three zero nodes is zero on the closed triangle") {
  BoundaryFunction phi;
  phi.nodes = {{0.0, 0.0}, {2.0943951023931953, 0.0}, {4.1887902047863905, 0.0}};
  const EnvelopeEvaluator conv = make_envelope_evaluator(phi);
  CHECK(conv(0.0, 0.0) == doctest::Approx(0.0));
  // Chord midpoint between the first two vertices.
  CHECK(conv(0.25, 0.4330127018922193) == doctest::Approx(0.0));
  CHECK(conv(-0.9, 0.0) == xr::inf);
  // Node values are reproduced exactly.
  for (const auto& node : phi.nodes) {
    const Vec2 p = node.point();
    CHECK(conv(p.x, p.y) == doctest::Approx(node.value));
  }
}

TEST_CASE("convex envelope of the wedge datum lives on a segment") {
  BoundaryFunction phi;
  phi.nodes = {{0.0, 0.0}, {3.14159265358979312, 0.0}};
  const EnvelopeEvaluator conv = make_envelope_evaluator(phi);
  CHECK(conv(0.5, 0.0) == doctest::Approx(0.0));
  CHECK(conv(-0.99, 0.0) == doctest::Approx(0.0));
  CHECK(conv(0.3, 0.2) == xr::inf);
  const DiskField field = convex_envelope(phi, 101);
  // Grid nodes on the diameter are finite, all others +inf.
  long finite_count = 0;
  for (int j = 0; j < field.n; ++j) {
    for (int i = 0; i < field.n; ++i) {
      if (xr::finite(field.at(i, j))) {
        ++finite_count;
        CHECK(field.coord(j) == doctest::Approx(0.0));
      }
    }
  }
  CHECK(finite_count == 101);
}

TEST_CASE("convex envelope of four square nodes needs a diagonal flip") {
  // Heights (1, 0, 0, 0) at angles 0, pi/2, pi, 3pi/2: the lower hull splits
  // along the vertical diagonal, not the one the initial fan uses.
  BoundaryFunction phi;
  phi.nodes = {{0.0, 1.0},
               {1.5707963267948966, 0.0},
               {3.14159265358979312, 0.0},
               {4.71238898038468967, 0.0}};
  const EnvelopeEvaluator conv = make_envelope_evaluator(phi);
  CHECK(conv(-0.5, 0.0) == doctest::Approx(0.0));
  CHECK(conv(0.5, 0.0) == doctest::Approx(0.5));
  CHECK(conv(0.0, 0.5) == doctest::Approx(0.0));
  CHECK(conv(0.0, -0.5) == doctest::Approx(0.0));
  CHECK(conv(1.0, 0.0) == doctest::Approx(1.0));
  // Affine along the boundary chord from (1,0) to (0,1).
  CHECK(conv(0.5, 0.5) == doctest::Approx(0.5));
}

TEST_CASE("monge-ampere measure of the quadratic is the cell area") {
  const int n = 65;
  GridField u(n, 1.0, 0.0);
  u.fill_from([](double x, double y) { return 0.5 * (x * x + y * y); });
  const double h = u.spacing();
  const std::vector<GridCellRange> cells = {{20, 30, 25, 35}, {32, 32, 33, 33}};
  const auto m = ma_measure(u, cells);
  CHECK(m[0] == doctest::Approx(25.0 * h * h).epsilon(1e-9));
  CHECK(m[1] == doctest::Approx(h * h).epsilon(1e-9));
}

TEST_CASE("monge-ampere measure of the cone concentrates at the apex") {
  const int n = 65;
  const DiskField u = disk_field_from(n, [](double x, double y) { return std::hypot(x, y); });
  // Central block of nodes (inside the disk) containing the apex.
  const int lo = 12, hi = 53;  // coords within +-0.72
  const auto m = ma_measure(u, {{lo, lo, hi, hi}, {40, 32, 41, 33}});
  CHECK(m[0] == doctest::Approx(3.14159265358979312).epsilon(0.05));
  CHECK(m[1] <= 1e-2);
}

TEST_CASE("monge-ampere measure of a crease is zero") {
  const int n = 49;
  GridField u(n, 1.0, 0.0);
  u.fill_from([](double x, double y) { return std::max(0.3 * x + 0.1 * y, -0.1 * x); });
  const auto m = ma_measure(u, {{10, 10, 39, 39}});
  CHECK(m[0] <= 1e-10);
}

TEST_CASE("monge-ampere measure rejects cells with infinite nodes") {
  const DiskField u = disk_field_from(33, [](double, double) { return 0.0; });
  CHECK_THROWS_AS(ma_measure(u, {{0, 0, 2, 2}}), Error);  // corner node outside disk
}
