#pragma once

#include <stdexcept>

namespace r0colloc {

/// Runtime numerical failure, as opposed to malformed input (which raises
/// std::invalid_argument / std::out_of_range).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The transition matrix admits no factorization: the boundary conditions
/// are degenerate or the discretization is rank deficient.
struct SingularOperatorError : NumericalError {
  using NumericalError::NumericalError;
};

/// The dominant eigenvalue carries a non-negligible imaginary part; it is
/// reported instead of being silently truncated to its modulus.
struct ComplexDominantError : NumericalError {
  using NumericalError::NumericalError;
};

/// Iteration failed to reach the requested tolerance.
struct ConvergenceError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace r0colloc
