#pragma once

#include <Eigen/Dense>

namespace r0colloc {

/// One-dimensional collocation grid on [lo, hi]: Chebyshev extremal nodes
/// in ascending order, Clenshaw-Curtis quadrature weights, the spectral
/// differentiation matrix and barycentric interpolation weights.
///
/// Immutable after construction and safe to share across threads.
struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  int degree = 0;                 ///< polynomial degree n (n+1 nodes)
  Eigen::VectorXd nodes;          ///< ascending, nodes[0]==lo, nodes[degree]==hi
  Eigen::VectorXd quad_weights;   ///< Clenshaw-Curtis weights, same ordering
  Eigen::MatrixXd diff;           ///< (n+1)x(n+1) differentiation matrix
  Eigen::VectorXd bary;           ///< barycentric weights, max-normalized

  /// Builds the full grid for Chebyshev extremal nodes of the given degree.
  static Grid1D chebyshev(int degree, double lo, double hi);

  int num_nodes() const { return degree + 1; }
  double length() const { return hi - lo; }
};

/// Chebyshev extremal nodes of degree n mapped onto [lo, hi], ascending.
/// Endpoints are snapped to lo and hi exactly. Requires n >= 1, lo < hi.
Eigen::VectorXd cheb_nodes(int degree, double lo, double hi);

/// Clenshaw-Curtis quadrature weights for cheb_nodes(degree, lo, hi).
/// Exact for polynomials of degree <= n; weights sum to hi - lo.
Eigen::VectorXd cc_weights(int degree, double lo, double hi);

/// Spectral differentiation matrix for arbitrary strictly increasing nodes.
/// Diagonal entries are set by the negative row-sum trick so that constants
/// differentiate to exactly zero.
Eigen::MatrixXd diff_matrix(const Eigen::VectorXd& nodes);

/// Barycentric interpolation weights for strictly increasing nodes,
/// normalized so the largest magnitude is 1 (any common scaling is valid).
Eigen::VectorXd bary_weights(const Eigen::VectorXd& nodes);

/// Evaluates the polynomial interpolating (nodes, values) at x using the
/// second barycentric form. Reproduces samples exactly at the nodes.
double interp1(const Eigen::VectorXd& nodes, const Eigen::VectorXd& bary,
               const Eigen::VectorXd& values, double x);

}  // namespace r0colloc
