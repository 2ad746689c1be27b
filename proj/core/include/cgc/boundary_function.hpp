#pragma once

#include <vector>

#include "cgc/extended_real.hpp"
#include "cgc/geometry.hpp"
#include "cgc/minkowski.hpp"

namespace cgc {

// Lower-semicontinuous boundary datum on the unit circle, represented by a
// finite node set: value at each listed angle, +inf between nodes. Nodes
// with value +inf may be listed; they are ignored by the hull operations.
struct BoundaryNode {
  double theta = 0.0;  // in [0, 2*pi)
  double value = 0.0;  // extended real
  Vec2 point() const;
};

struct BoundaryFunction {
  std::vector<BoundaryNode> nodes;  // angles strictly increasing
};

// Validates angle range/order and requires at least one finite node; throws
// Error{InvalidArgument}.
void validate(const BoundaryFunction& phi);

std::vector<BoundaryNode> finite_nodes(const BoundaryFunction& phi);

enum class DatumClass { NotRegular, Wedge, Regular };

// NotRegular with < 2 finite nodes, Wedge with exactly 2 (distinct
// directions), Regular with >= 3 distinct finite directions.
DatumClass classify_domain(const BoundaryFunction& phi);

// True iff p lies strictly in the future of every defining null plane:
// <p, (xi_i, 1)> < phi_i at every finite node. Throws NotRegular with fewer
// than two finite nodes.
bool domain_membership(const BoundaryFunction& phi, const MinkVector& p);

}  // namespace cgc
