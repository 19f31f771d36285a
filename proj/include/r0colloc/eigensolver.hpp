#pragma once

#include <utility>

#include <Eigen/Dense>

#include "r0colloc/assembly.hpp"
#include "r0colloc/errors.hpp"
#include "r0colloc/grid2d.hpp"
#include "r0colloc/model.hpp"

namespace r0colloc {

struct EigenOptions {
  double tol = 1e-13;  ///< relative change tolerance for the iteration
  int max_iter = 10000;
  /// Residual bound a result must meet to count as converged. Kept separate
  /// from tol: the iteration tracks eigenvalue increments, while the
  /// residual floor is set by the conditioning of the assembled pencil.
  double residual_tol = 1e-10;
};

/// Dominant eigenpair of a pencil. The eigenvector is scaled so its entry
/// of maximum absolute value equals +1.
struct R0Result {
  double r0 = 0.0;
  GridFunction eigvec;
  double residual = 0.0;  ///< ||B v - r0 M v||_inf / ||v||_inf
  int iterations = 0;
  bool converged = false;
};

/// Computes the eigenvalue of maximum modulus of the pencil B v = lambda
/// M v and its eigenvector: factorize M once, then run power iteration on
/// v -> M^{-1}(B v). Falls back to a full dense eigendecomposition when the
/// iteration stalls (e.g. a complex-conjugate dominant pair).
///
/// Throws SingularOperatorError when M admits no factorization,
/// ComplexDominantError when the dominant eigenvalue has a non-negligible
/// imaginary part, and ConvergenceError when even the fallback fails.
R0Result dominant_pair(const DiscretePencil& pencil,
                       const EigenOptions& opts = {});
R0Result dominant_pair(const DiscretePencil& pencil, double tol, int max_iter);

/// Pencil residual ||B phi - lambda M phi||_inf / ||phi||_inf.
double residual(const DiscretePencil& pencil, double lambda,
                const GridFunction& phi);

/// Rescales phi_num so its interpolant matches phi_exact at the point of a
/// fixed 101x101 uniform evaluation grid where |phi_exact| is largest, then
/// returns the rescaled samples and the sup error over that grid.
std::pair<GridFunction, double> match_exact(const GridFunction& phi_num,
                                            const Coefficient& phi_exact);

}  // namespace r0colloc
