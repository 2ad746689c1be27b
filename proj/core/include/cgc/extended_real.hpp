#pragma once

#include <cmath>
#include <limits>

// Extended reals: support functions and boundary data legitimately take the
// value +infinity (closed convex functions on the disk). A single sentinel is
// used everywhere, and arithmetic that could produce NaN from the sentinel
// (inf - inf, 0 * inf) must go through the helpers below instead of raw
// floating-point operators.
namespace cgc::xr {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline bool finite(double v) { return std::isfinite(v); }

// Addition with +inf absorbing; both operands must be > -inf.
inline double add(double a, double b) {
  if (!finite(a) || !finite(b)) return inf;
  return a + b;
}

// Scaling by a nonnegative factor: 0 * inf is 0 here (an empty contribution),
// which is the convention needed by convex combinations of node values.
inline double scale(double c, double v) {
  if (c == 0.0) return 0.0;
  if (!finite(v)) return inf;
  return c * v;
}

inline double min(double a, double b) { return a < b ? a : b; }
inline double max(double a, double b) { return a > b ? a : b; }

}  // namespace cgc::xr
