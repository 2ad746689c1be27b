#pragma once

#include <functional>
#include <vector>

#include "cgc/extended_real.hpp"

namespace cgc {

// Uniform N x N sampling of an extended-real-valued function over the square
// [-half_width, half_width]^2, node (i, j) at (coord(i), coord(j)). Fields
// with half_width = 1 carry support functions on the closed disk (+inf
// outside it); wider fields carry entire graphs and their duals.
struct GridField {
  int n = 0;
  double half_width = 1.0;
  bool closed_convex = false;
  std::vector<double> v;

  GridField() = default;
  GridField(int n_, double half_width_, double fill = xr::inf)
      : n(n_), half_width(half_width_), v(static_cast<std::size_t>(n_) * n_, fill) {}

  double spacing() const { return 2.0 * half_width / (n - 1); }
  double coord(int i) const { return -half_width + spacing() * i; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * n + i;
  }
  double& at(int i, int j) { return v[index(i, j)]; }
  double at(int i, int j) const { return v[index(i, j)]; }

  // Bilinear interpolation; any cell with a +inf corner evaluates to +inf
  // (keeps lower semicontinuity: the interpolant never dips below the true
  // closed function near the +inf region). Points outside the square are
  // +inf.
  double eval(double x, double y) const;

  // Populate from a callable (x, y) -> extended real.
  void fill_from(const std::function<double(double, double)>& f);
};

// A support function's natural home: the square of half-width 1 with +inf
// outside the closed unit disk.
using DiskField = GridField;

// DiskField sampled from f on disk nodes (|x| <= 1), +inf outside.
DiskField disk_field_from(int n, const std::function<double(double, double)>& f);

// Largest |a - b| over nodes finite in both fields; nodes finite in exactly
// one field are counted separately.
struct FieldDifference {
  double max_abs = 0.0;
  long mismatched_nodes = 0;
};
FieldDifference field_difference(const GridField& a, const GridField& b);

// Minimum centered second difference over axis and diagonal directions at
// nodes whose full stencil is finite. Nonnegative (up to tolerance) for
// discretely convex fields.
double min_second_difference(const GridField& u);

// Deterministically samples pairs of finite nodes and checks that each
// midpoint (rounded to the nearest node) has a finite node within one cell:
// the finite set is convex up to one grid cell.
bool finite_set_midpoint_convex(const GridField& u, long samples = 20000);

}  // namespace cgc
