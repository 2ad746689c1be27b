#pragma once

#include <Eigen/Dense>

#include "cgc/geometry.hpp"

// Minkowski 3-space primitives: the bilinear form of signature (2,1), causal
// classification, achronal planes parametrized by points of the closed disk,
// and the isometry group generated by rotations, boosts, and translations.
namespace cgc {

struct MinkVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

// <p, q> = p1 q1 + p2 q2 - p3 q3.
double minkowski_inner(const MinkVector& p, const MinkVector& q);

enum class CausalClass { Spacelike, Lightlike, TimelikeFuture, TimelikePast, Zero };

// Sign of <v,v> with an absolute 1e-12 band classified Lightlike; the exact
// zero vector is its own class. Timelike vectors split by the sign of x3.
CausalClass causal_class(const MinkVector& v);

// Plane { x : <x, (xi, 1)> = height } for xi in the closed unit disk:
// spacelike for |xi| < 1, null for |xi| = 1.
struct AchronalPlane {
  Vec2 xi;
  double height = 0.0;
};

// True iff <p, (xi, 1)> <= height, i.e. p lies in the closed future side.
bool plane_halfspace_contains(const AchronalPlane& plane, const MinkVector& p);

// Orientation- and time-orientation-preserving affine isometry x -> Lx + t.
struct Isometry {
  Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
  MinkVector translation;
};

// Max-norm defect of L^T J L - J with J = diag(1, 1, -1).
double gram_defect(const Eigen::Matrix3d& linear);

// Throws Error{InvalidArgument} unless gram_defect <= 1e-12 and the (3,3)
// entry is positive (future-preserving).
void validate_isometry(const Isometry& iso);

MinkVector apply(const Isometry& iso, const MinkVector& p);
Isometry compose(const Isometry& outer, const Isometry& inner);

// Rotation by `angle` about the x3-axis.
Isometry rotation_isometry(double angle);
// Boost of rapidity eps along the unit direction `axis` in the x1 x2 plane.
Isometry boost_isometry(double eps, Vec2 axis);
Isometry translation_isometry(const MinkVector& t);

}  // namespace cgc
