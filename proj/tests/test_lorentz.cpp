#include <cmath>
#include <random>

#include "cgc/errors.hpp"
#include "cgc/minkowski.hpp"
#include "doctest.h"

using namespace cgc;

TEST_CASE("minkowski inner product on basis cases") {
  CHECK(minkowski_inner({0, 0, 1}, {0, 0, 1}) == -1.0);
  CHECK(minkowski_inner({1, 0, 0}, {1, 0, 0}) == 1.0);
  CHECK(minkowski_inner({1, 0, 1}, {1, 0, 1}) == 0.0);
}

TEST_CASE("minkowski inner product is symmetric bilinear") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    MinkVector p{d(rng), d(rng), d(rng)};
    MinkVector q{d(rng), d(rng), d(rng)};
    MinkVector r{d(rng), d(rng), d(rng)};
    const double a = d(rng);
    CHECK(minkowski_inner(p, q) == doctest::Approx(minkowski_inner(q, p)));
    MinkVector pq{p.x1 + a * q.x1, p.x2 + a * q.x2, p.x3 + a * q.x3};
    CHECK(minkowski_inner(pq, r) ==
          doctest::Approx(minkowski_inner(p, r) + a * minkowski_inner(q, r)));
  }
}

TEST_CASE("causal classification") {
  CHECK(causal_class({0, 0, 2}) == CausalClass::TimelikeFuture);
  CHECK(causal_class({3, 4, 5}) == CausalClass::Lightlike);
  CHECK(causal_class({1, 1, 0}) == CausalClass::Spacelike);
  CHECK(causal_class({0, 0, -2}) == CausalClass::TimelikePast);
  CHECK(causal_class({0, 0, 0}) == CausalClass::Zero);
  // 1e-12 band around the light cone counts as lightlike.
  CHECK(causal_class({1, 0, std::sqrt(1.0 + 1e-13)}) == CausalClass::Lightlike);
}

TEST_CASE("plane half-space membership") {
  AchronalPlane horizontal{{0.0, 0.0}, 0.0};
  CHECK(plane_halfspace_contains(horizontal, {0, 0, 1}));
  CHECK_FALSE(plane_halfspace_contains(horizontal, {0, 0, -1}));
  AchronalPlane null_plane{{1.0, 0.0}, 0.0};
  CHECK(plane_halfspace_contains(null_plane, {1, 0, 1}));
}

TEST_CASE("isometry factories preserve the form and the time orientation") {
  const Isometry r = rotation_isometry(0.7);
  const Isometry b = boost_isometry(1.3, {0.6, 0.8});
  const Isometry c = compose(b, compose(r, translation_isometry({0.1, -0.2, 0.5})));
  for (const Isometry& iso : {r, b, c}) {
    CHECK(gram_defect(iso.linear) <= 1e-12);
    CHECK_NOTHROW(validate_isometry(iso));
  }
  Isometry flip;
  flip.linear(2, 2) = -1.0;
  CHECK_THROWS_AS(validate_isometry(flip), Error);
}

TEST_CASE("causal class is invariant under future-preserving isometries") {
  const Isometry iso = compose(boost_isometry(0.9, {1.0, 0.0}), rotation_isometry(2.1));
  std::mt19937 rng(11u);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    MinkVector v{d(rng), d(rng), d(rng)};
    const CausalClass before = causal_class(v);
    if (before == CausalClass::Lightlike) continue;  // tolerance band can shift
    Isometry linear_only = iso;
    linear_only.translation = MinkVector{};
    CHECK(causal_class(apply(linear_only, v)) == before);
  }
}

TEST_CASE("boost factory matches the axis-aligned matrix") {
  const Isometry b = boost_isometry(0.5, {1.0, 0.0});
  CHECK(b.linear(0, 0) == doctest::Approx(std::cosh(0.5)));
  CHECK(b.linear(0, 2) == doctest::Approx(std::sinh(0.5)));
  CHECK(b.linear(1, 1) == doctest::Approx(1.0));
  CHECK(b.linear(2, 2) == doctest::Approx(std::cosh(0.5)));
}

#include <algorithm>

#include "cgc/grid_field.hpp"
#include "cgc/support_action.hpp"

namespace {

cgc::DiskField hyperboloid_field(int n) {
  return cgc::disk_field_from(n, [](double x, double y) {
    const double s = 1.0 - x * x - y * y;
    return -std::sqrt(s > 0.0 ? s : 0.0);
  });
}

double sup_diff_inside(const cgc::DiskField& a, const cgc::DiskField& b, double rmax) {
  double worst = 0.0;
  for (int j = 0; j < a.n; ++j) {
    for (int i = 0; i < a.n; ++i) {
      const double x = a.coord(i);
      const double y = a.coord(j);
      if (x * x + y * y > rmax * rmax) continue;
      if (cgc::xr::finite(a.at(i, j)) && cgc::xr::finite(b.at(i, j))) {
        worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
      }
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("boost action at rapidity zero is the identity") {
  const cgc::DiskField u = hyperboloid_field(101);
  const cgc::DiskField v = boost_support_action(u, 0.0, {1.0, 0.0});
  CHECK(cgc::field_difference(u, v).max_abs == 0.0);
  CHECK(cgc::field_difference(u, v).mismatched_nodes == 0);
}

TEST_CASE("hyperboloid support is invariant under boosts") {
  const cgc::DiskField u = hyperboloid_field(201);
  for (const cgc::Vec2 axis : {cgc::Vec2{1.0, 0.0}, cgc::Vec2{0.6, 0.8}}) {
    const cgc::DiskField v = boost_support_action(u, 0.5, axis);
    CHECK(sup_diff_inside(u, v, 0.9) <= 2e-3);
  }
}

TEST_CASE("boost action composed with its inverse is the identity") {
  const cgc::DiskField u = hyperboloid_field(201);
  const cgc::DiskField v =
      boost_support_action(boost_support_action(u, 0.7, {1.0, 0.0}), -0.7, {1.0, 0.0});
  CHECK(sup_diff_inside(u, v, 0.85) <= 4e-3);
}

TEST_CASE("boost action rejects overflow-scale rapidity") {
  const cgc::DiskField u = hyperboloid_field(33);
  CHECK_THROWS_AS(boost_support_action(u, 50.5, {1.0, 0.0}), cgc::Error);
}
