#pragma once

#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "r0colloc/spectral1d.hpp"

namespace r0colloc {

/// Flat index of the sample at (x_i, y_j) on a grid with y-degree m:
/// k = i*(m+1) + j. The inverse is vec_unindex.
int vec_index(int i, int j, int m);

/// Recovers (i, j) from the flat index k.
std::pair<int, int> vec_unindex(int k, int m);

/// Tensor product of two one-dimensional collocation grids. The x axis has
/// degree n (gx), the y axis degree m (gy); samples live on the
/// (n+1) x (m+1) node lattice and are vectorized row-major in i.
struct TensorGrid {
  Grid1D gx;
  Grid1D gy;

  static TensorGrid chebyshev(int n, int m, double x_lo, double x_hi,
                              double y_lo, double y_hi);

  int size() const { return (gx.degree + 1) * (gy.degree + 1); }
  int index(int i, int j) const;
  std::pair<int, int> unindex(int k) const;
};

/// A scalar field sampled on a TensorGrid, stored vectorized.
struct GridFunction {
  TensorGrid grid;
  Eigen::VectorXd values;  ///< values[vec_index(i,j,m)] = f(x_i, y_j)

  /// Samples a callable at every grid node.
  static GridFunction sample(const TensorGrid& grid,
                             const std::function<double(double, double)>& f);

  /// Rebuilds a GridFunction from an (n+1) x (m+1) sample matrix.
  static GridFunction from_matrix(const TensorGrid& grid,
                                  const Eigen::MatrixXd& samples);

  double operator()(int i, int j) const {
    return values[grid.index(i, j)];
  }

  /// Devectorizes into an (n+1) x (m+1) matrix, rows indexed by i.
  Eigen::MatrixXd to_matrix() const;
};

/// Evaluates the interpolating polynomial of the samples at (x, y) by
/// collapsing the x direction first, then y. Exact at grid nodes. Points
/// outside the closed domain rectangle are rejected (no extrapolation).
double interp2(const GridFunction& f, double x, double y);

}  // namespace r0colloc
