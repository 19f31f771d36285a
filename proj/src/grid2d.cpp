#include "r0colloc/grid2d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace r0colloc {

int vec_index(int i, int j, int m) {
  if (i < 0 || j < 0 || j > m)
    throw std::out_of_range("vec_index: indices out of range");
  return i * (m + 1) + j;
}

std::pair<int, int> vec_unindex(int k, int m) {
  if (k < 0) throw std::out_of_range("vec_unindex: negative index");
  return {k / (m + 1), k % (m + 1)};
}

TensorGrid TensorGrid::chebyshev(int n, int m, double x_lo, double x_hi,
                                 double y_lo, double y_hi) {
  return TensorGrid{Grid1D::chebyshev(n, x_lo, x_hi),
                    Grid1D::chebyshev(m, y_lo, y_hi)};
}

int TensorGrid::index(int i, int j) const {
  if (i > gx.degree || j > gy.degree)
    throw std::out_of_range("TensorGrid::index: indices out of range");
  return vec_index(i, j, gy.degree);
}

std::pair<int, int> TensorGrid::unindex(int k) const {
  if (k >= size()) throw std::out_of_range("TensorGrid::unindex: out of range");
  return vec_unindex(k, gy.degree);
}

GridFunction GridFunction::sample(
    const TensorGrid& grid, const std::function<double(double, double)>& f) {
  GridFunction g{grid, Eigen::VectorXd(grid.size())};
  for (int i = 0; i <= grid.gx.degree; ++i)
    for (int j = 0; j <= grid.gy.degree; ++j)
      g.values[grid.index(i, j)] = f(grid.gx.nodes[i], grid.gy.nodes[j]);
  return g;
}

GridFunction GridFunction::from_matrix(const TensorGrid& grid,
                                       const Eigen::MatrixXd& samples) {
  if (samples.rows() != grid.gx.degree + 1 ||
      samples.cols() != grid.gy.degree + 1)
    throw std::invalid_argument("from_matrix: shape mismatch");
  GridFunction g{grid, Eigen::VectorXd(grid.size())};
  for (int i = 0; i < samples.rows(); ++i)
    for (int j = 0; j < samples.cols(); ++j)
      g.values[grid.index(i, j)] = samples(i, j);
  return g;
}

Eigen::MatrixXd GridFunction::to_matrix() const {
  Eigen::MatrixXd out(grid.gx.degree + 1, grid.gy.degree + 1);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = values[grid.index(i, j)];
  return out;
}

double interp2(const GridFunction& f, double x, double y) {
  const Grid1D& gx = f.grid.gx;
  const Grid1D& gy = f.grid.gy;
  // Accept rounding-level overshoot from uniform evaluation grids whose last
  // point lands a few ulps past the endpoint.
  const double tx = 1e-12 * gx.length(), ty = 1e-12 * gy.length();
  if (x < gx.lo - tx || x > gx.hi + tx || y < gy.lo - ty || y > gy.hi + ty)
    throw std::domain_error("interp2: point outside the domain rectangle");
  x = std::min(std::max(x, gx.lo), gx.hi);
  y = std::min(std::max(y, gy.lo), gy.hi);

  const int n = gx.degree, m = gy.degree;
  // Collapse x at each fixed y_j, then collapse y.
  Eigen::VectorXd column(n + 1), slice(m + 1);
  for (int j = 0; j <= m; ++j) {
    for (int i = 0; i <= n; ++i) column[i] = f.values[i * (m + 1) + j];
    slice[j] = interp1(gx.nodes, gx.bary, column, x);
  }
  return interp1(gy.nodes, gy.bary, slice, y);
}

}  // namespace r0colloc
