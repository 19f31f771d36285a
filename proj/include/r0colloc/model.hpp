#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "r0colloc/grid2d.hpp"

namespace r0colloc {

/// Which end of an axis carries the (possibly nonlocal) boundary condition.
enum class BoundarySide { Low, High };

using Coefficient = std::function<double(double, double)>;
using BirthKernel = std::function<double(double, double, double, double)>;
using BoundaryKernel = std::function<double(double, double, double)>;

/// A population model structured by two continuous variables x and y.
/// The transition operator acts as
///
///   (M phi)(x,y) = a(x,y) d/dx[b(x,y) phi] + c(x,y) d/dy[d(x,y) phi]
///                  + mu(x,y) phi,
///
/// the birth operator as (B phi)(x,y) = integral of K(x,y,xi,sigma)
/// phi(xi,sigma) over the domain, and each axis carries one nonlocal
/// condition, e.g. for LOW sides
///
///   phi(x, y_lo) = integral of alpha(x, xi, sigma) phi(xi, sigma),
///   phi(x_lo, y) = integral of beta(y, xi, sigma) phi(xi, sigma).
///
/// The reproduction number is the dominant eigenvalue of B phi = lambda
/// M phi under these conditions.
struct ModelSpec {
  std::string name;

  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;

  Coefficient coeff_a, coeff_b, coeff_c, coeff_d, coeff_mu;
  BirthKernel kernel_K;
  BoundaryKernel kernel_alpha;  ///< y-boundary condition kernel, args (x, xi, sigma)
  BoundaryKernel kernel_beta;   ///< x-boundary condition kernel, args (y, xi, sigma)

  BoundarySide x_bc_side = BoundarySide::Low;
  BoundarySide y_bc_side = BoundarySide::Low;

  /// Marks grid nodes where mu is singular; collocation rows there are
  /// replaced by Dirichlet rows. May be empty (no singular nodes).
  std::function<bool(double, double)> singular_dirichlet_nodes;

  bool is_singular_node(double x, double y) const {
    return singular_dirichlet_nodes && singular_dirichlet_nodes(x, y);
  }
};

/// Known reference data for benchmarking a model.
struct ExactReference {
  std::optional<double> r0_exact;   ///< > 0 when present
  Coefficient eigenfunction_exact;  ///< empty when unknown
  std::string r0_reference_note;    ///< provenance of the reference value
  /// True when r0_exact came from a high-resolution run of this method
  /// instead of a closed form; convergence studies recompute it fresh.
  bool r0_self_converged = false;
};

struct BuiltinModel {
  ModelSpec spec;
  ExactReference reference;
  std::string description;
};

/// Names accepted by builtin(), in registry order.
std::vector<std::string> builtin_names();

/// Returns a fully populated built-in model. Throws std::invalid_argument
/// for unknown names.
BuiltinModel builtin(const std::string& name);

/// Outcome of checking a spec against a grid. Errors make the pair
/// unusable; warnings flag data outside the usual modeling assumptions
/// (negative rates or kernels).
struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

/// Evaluates every coefficient at all grid nodes and the kernels at a
/// subsample of source nodes, reporting non-finite values not covered by
/// singular_dirichlet_nodes and negativity of mu, a, c, K, alpha, beta.
/// Never throws; all findings land in the report.
ValidationReport validate(const ModelSpec& spec, const TensorGrid& grid);

}  // namespace r0colloc
