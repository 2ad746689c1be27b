#pragma once

#include <vector>

#include "cgc/grid_field.hpp"
#include "cgc/surface_mesh.hpp"

namespace cgc {

// Comparison surfaces with closed-form or quadrature-accessible support
// functions: the hyperboloid family, the half-disk chord barrier, the
// boost-invariant revolution family, and the degenerate trough.

// u(x) = -(1/sqrt(K)) sqrt(1 - |x|^2): support of the rescaled hyperboloid
// of curvature K. Zero on the boundary circle.
double hyperboloid_support_value(double K, double x, double y);
DiskField hyperboloid_support(double K, int grid_n);

// Support of the constant-curvature surface over a half-disk. The chord is
// {z . n = offset} with unit normal n = (cos normal_angle, sin normal_angle)
// pointing into the finite side {z . n >= offset}; +inf on the other side.
// Canonical chord (normal_angle = 0, offset = 0):
//   u(x, y) = -(x / (2 sqrt(K))) log((1+s)/(1-s)),  s = sqrt(1 - x^2/(1-y^2))
// for x >= 0. General chords are transported from the canonical one by a
// rotation followed by a boost, both applied in closed form.
double chord_barrier_value(double K, double normal_angle, double offset, double x,
                           double y);
DiskField chord_barrier(double K, double normal_angle, double offset, int grid_n);

// Revolution (boost-invariant) family: profile curve r(t) = a cosh t,
// g'(t)^2 - r'(t)^2 = 1, surface swept by hyperbolic rotation.
struct RevolutionProfile {
  double a = 1.0;
  double K = 1.0;
  double F = 0.0;          // lim_{t->inf} (g(t) - r(t)), for the K = 1 profile
  std::vector<double> t;   // uniform samples
  std::vector<double> g;
  std::vector<double> r;
  std::vector<double> dg;  // g' = sqrt(1 + a^2 sinh^2 t)
  std::vector<double> dr;  // r' = a sinh t
};

struct RevolutionSurface {
  RevolutionProfile profile;
  SurfaceMesh mesh;
  DiskField support;
};

// F(a) = integral_0^inf [sqrt(1 + a^2 sinh^2 x) - a sinh x] dx - a, the
// boundary slope of the revolution support function. F(1) = 0; strictly
// decreasing in a; diverges as a -> 0+.
double revolution_F(double a);

// Support value of the revolution surface at a disk point, via the
// diameter profile u_d and the invariance u(x, y) =
// sqrt(1-y^2) u_d(x / sqrt(1-y^2)).
double revolution_support_value(double a, double K, double x, double y);

RevolutionSurface revolution_surface(double a, double K, int grid_n,
                                     double mesh_half_width = 1.5, int mesh_n = 151);

// Degenerate limit: u(0, y) = -sqrt(1 - y^2) on the vertical diameter, +inf
// off it.
double trough_support_value(double x, double y);
DiskField trough_support(int grid_n);

}  // namespace cgc
