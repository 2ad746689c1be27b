#include "cgc/minkowski.hpp"

#include <cmath>

#include "cgc/errors.hpp"

namespace cgc {

double minkowski_inner(const MinkVector& p, const MinkVector& q) {
  return p.x1 * q.x1 + p.x2 * q.x2 - p.x3 * q.x3;
}

CausalClass causal_class(const MinkVector& v) {
  if (v.x1 == 0.0 && v.x2 == 0.0 && v.x3 == 0.0) return CausalClass::Zero;
  const double q = minkowski_inner(v, v);
  if (std::abs(q) <= 1e-12) return CausalClass::Lightlike;
  if (q > 0.0) return CausalClass::Spacelike;
  return v.x3 > 0.0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
}

bool plane_halfspace_contains(const AchronalPlane& plane, const MinkVector& p) {
  const MinkVector conormal{plane.xi.x, plane.xi.y, 1.0};
  return minkowski_inner(p, conormal) <= plane.height;
}

double gram_defect(const Eigen::Matrix3d& linear) {
  Eigen::Matrix3d j = Eigen::Matrix3d::Identity();
  j(2, 2) = -1.0;
  return (linear.transpose() * j * linear - j).cwiseAbs().maxCoeff();
}

void validate_isometry(const Isometry& iso) {
  if (gram_defect(iso.linear) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument,
                "linear part does not preserve the Minkowski form to 1e-12");
  }
  if (iso.linear(2, 2) <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "isometry reverses time orientation");
  }
}

MinkVector apply(const Isometry& iso, const MinkVector& p) {
  Eigen::Vector3d v(p.x1, p.x2, p.x3);
  Eigen::Vector3d w = iso.linear * v;
  return {w(0) + iso.translation.x1, w(1) + iso.translation.x2,
          w(2) + iso.translation.x3};
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  Isometry out;
  out.linear = outer.linear * inner.linear;
  const MinkVector moved = apply(outer, inner.translation);
  out.translation = moved;
  return out;
}

Isometry rotation_isometry(double angle) {
  Isometry iso;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  iso.linear << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return iso;
}

Isometry boost_isometry(double eps, Vec2 axis) {
  const double n = axis.norm();
  if (!(n > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "boost axis must be a nonzero 2-vector");
  }
  axis = axis * (1.0 / n);
  const double ch = std::cosh(eps);
  const double sh = std::sinh(eps);
  Eigen::Matrix3d b;
  b << ch, 0.0, sh, 0.0, 1.0, 0.0, sh, 0.0, ch;
  const double ca = axis.x;
  const double sa = axis.y;
  Eigen::Matrix3d r;
  r << ca, -sa, 0.0, sa, ca, 0.0, 0.0, 0.0, 1.0;
  Isometry iso;
  iso.linear = r * b * r.transpose();
  return iso;
}

Isometry translation_isometry(const MinkVector& t) {
  Isometry iso;
  iso.translation = t;
  return iso;
}

}  // namespace cgc
