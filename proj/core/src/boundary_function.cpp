#include "cgc/boundary_function.hpp"

#include <cmath>
#include <numbers>

#include "cgc/errors.hpp"

namespace cgc {

Vec2 BoundaryNode::point() const { return {std::cos(theta), std::sin(theta)}; }

void validate(const BoundaryFunction& phi) {
  double prev = -1.0;
  bool any_finite = false;
  for (const auto& node : phi.nodes) {
    if (!(node.theta >= 0.0) || node.theta >= 2.0 * std::numbers::pi) {
      throw Error(ErrorCode::InvalidArgument,
                  "boundary node angle outside [0, 2*pi)");
    }
    if (node.theta <= prev) {
      throw Error(ErrorCode::InvalidArgument,
                  "boundary node angles must be strictly increasing");
    }
    if (node.value == -xr::inf || std::isnan(node.value)) {
      throw Error(ErrorCode::InvalidArgument,
                  "boundary values must lie in R union {+inf}");
    }
    prev = node.theta;
    any_finite = any_finite || xr::finite(node.value);
  }
  if (!any_finite) {
    throw Error(ErrorCode::InvalidArgument,
                "boundary function needs at least one finite node");
  }
}

std::vector<BoundaryNode> finite_nodes(const BoundaryFunction& phi) {
  std::vector<BoundaryNode> out;
  for (const auto& node : phi.nodes) {
    if (xr::finite(node.value)) out.push_back(node);
  }
  return out;
}

DatumClass classify_domain(const BoundaryFunction& phi) {
  const auto fin = finite_nodes(phi);
  if (fin.size() < 2) return DatumClass::NotRegular;
  if (fin.size() == 2) return DatumClass::Wedge;
  return DatumClass::Regular;
}

bool domain_membership(const BoundaryFunction& phi, const MinkVector& p) {
  const auto fin = finite_nodes(phi);
  if (fin.size() < 2) {
    throw Error(ErrorCode::NotRegular,
                "domain membership needs at least two finite boundary nodes");
  }
  for (const auto& node : fin) {
    const Vec2 xi = node.point();
    if (p.x1 * xi.x + p.x2 * xi.y - p.x3 >= node.value) return false;
  }
  return true;
}

}  // namespace cgc
