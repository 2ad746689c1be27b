#pragma once

#include "cgc/grid_field.hpp"

namespace cgc {

// Legendre-Fenchel transform f*(y) = sup_x (x . y - f(x)) over the finite
// samples of f, evaluated on a uniform target grid. Exact for the sampled
// (max-of-affine) relaxation of f; computed by separable one-dimensional
// conjugates. Throws AllInfinite when f has no finite sample.
GridField legendre_transform(const GridField& f, int target_n,
                             double target_half_width);

}  // namespace cgc
