#pragma once

#include <stdexcept>
#include <string>

namespace cgc {

// Typed failure conditions surfaced by library operations. Each value names
// the contract that was violated, not the call site.
enum class ErrorCode {
  InvalidArgument,        // malformed input (bad sizes, non-isometry, |eps| too large, ...)
  AllInfinite,            // a transform of a function that is +inf everywhere
  EmptyMesh,              // mesh operation on a mesh with no vertices
  NotGradientSurjective,  // gradient image does not cover the requested square
  InfiniteCell,           // Monge-Ampere measure queried on a cell touching +inf values
  NotRegular,             // boundary datum with fewer than two finite nodes
  WedgeDatum,             // boundary datum with exactly two finite nodes (degenerate problem)
  NotStrictlyInside,      // Dirichlet subproblem region touches the unit circle
  NonConvergence,         // iterative solver failed to reach tolerance
  BisectionExhausted,     // bracketing search ran out of iterations
  StepRejected,           // ODE integrator rejected a step (frame drift / step floor)
  SchemaViolation,        // run configuration fails validation
  IoFailure,              // file could not be read or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cgc
