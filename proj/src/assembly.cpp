#include "r0colloc/assembly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "r0colloc/errors.hpp"

namespace r0colloc {

namespace {

enum class RowKind { Interior, XBoundary, YBoundary, Dirichlet };

// The x condition wins at the corner node; Dirichlet replacement applies
// only where no boundary condition is collocated.
RowKind classify(const ModelSpec& spec, const TensorGrid& grid, int i, int j) {
  const int i_b = spec.x_bc_side == BoundarySide::Low ? 0 : grid.gx.degree;
  const int j_b = spec.y_bc_side == BoundarySide::Low ? 0 : grid.gy.degree;
  if (i == i_b) return RowKind::XBoundary;
  if (j == j_b) return RowKind::YBoundary;
  if (spec.is_singular_node(grid.gx.nodes[i], grid.gy.nodes[j]))
    return RowKind::Dirichlet;
  return RowKind::Interior;
}

void check_bounds(const ModelSpec& spec, const TensorGrid& grid) {
  const double sx = 1e-12 * std::max(1.0, spec.x_hi - spec.x_lo);
  const double sy = 1e-12 * std::max(1.0, spec.y_hi - spec.y_lo);
  if (std::abs(grid.gx.lo - spec.x_lo) > sx ||
      std::abs(grid.gx.hi - spec.x_hi) > sx ||
      std::abs(grid.gy.lo - spec.y_lo) > sy ||
      std::abs(grid.gy.hi - spec.y_hi) > sy)
    throw std::invalid_argument(
        "assemble: grid bounds do not match the model domain");
}

// Tensor cubature weight per flat column index.
Eigen::VectorXd column_weights(const TensorGrid& grid) {
  const int n = grid.gx.degree, m = grid.gy.degree;
  Eigen::VectorXd W(grid.size());
  for (int k = 0; k <= n; ++k)
    for (int h = 0; h <= m; ++h)
      W[k * (m + 1) + h] = grid.gx.quad_weights[k] * grid.gy.quad_weights[h];
  return W;
}

[[noreturn]] void bad_eval(const char* what, double x, double y) {
  throw NumericalError(std::string(what) + " evaluated non-finite at (" +
                       std::to_string(x) + "," + std::to_string(y) + ")");
}

}  // namespace

Eigen::MatrixXd assemble_B(const ModelSpec& spec, const TensorGrid& grid) {
  check_bounds(spec, grid);
  const int n = grid.gx.degree, m = grid.gy.degree, N = grid.size();
  const auto& xs = grid.gx.nodes;
  const auto& ys = grid.gy.nodes;
  const Eigen::VectorXd W = column_weights(grid);

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      if (classify(spec, grid, i, j) != RowKind::Interior) continue;
      const int row = i * (m + 1) + j;
      for (int k = 0; k <= n; ++k) {
        for (int h = 0; h <= m; ++h) {
          const int col = k * (m + 1) + h;
          const double K = spec.kernel_K(xs[i], ys[j], xs[k], ys[h]);
          if (!std::isfinite(K)) bad_eval("kernel_K", xs[i], ys[j]);
          B(row, col) = W[col] * K;
        }
      }
    }
  }
  return B;
}

Eigen::MatrixXd assemble_M(const ModelSpec& spec, const TensorGrid& grid) {
  check_bounds(spec, grid);
  const int n = grid.gx.degree, m = grid.gy.degree, N = grid.size();
  const auto& xs = grid.gx.nodes;
  const auto& ys = grid.gy.nodes;
  const auto& Dx = grid.gx.diff;
  const auto& Dy = grid.gy.diff;
  const Eigen::VectorXd W = column_weights(grid);

  // Node samples of the scalar coefficients, shared across rows.
  Eigen::MatrixXd bS(n + 1, m + 1), dS(n + 1, m + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) {
      bS(i, j) = spec.coeff_b(xs[i], ys[j]);
      dS(i, j) = spec.coeff_d(xs[i], ys[j]);
    }

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      const int row = i * (m + 1) + j;
      const double x = xs[i], y = ys[j];
      switch (classify(spec, grid, i, j)) {
        case RowKind::Interior: {
          const double a = spec.coeff_a(x, y);
          const double c = spec.coeff_c(x, y);
          const double mu = spec.coeff_mu(x, y);
          if (!std::isfinite(a) || !std::isfinite(c) || !std::isfinite(mu))
            bad_eval("coefficient", x, y);
          for (int k = 0; k <= n; ++k) {
            if (!std::isfinite(bS(k, j))) bad_eval("coeff_b", xs[k], y);
            M(row, k * (m + 1) + j) += a * Dx(i, k) * bS(k, j);
          }
          for (int h = 0; h <= m; ++h) {
            if (!std::isfinite(dS(i, h))) bad_eval("coeff_d", x, ys[h]);
            M(row, i * (m + 1) + h) += c * Dy(j, h) * dS(i, h);
          }
          M(row, row) += mu;
          break;
        }
        case RowKind::XBoundary: {
          M(row, row) += 1.0;
          for (int k = 0; k <= n; ++k)
            for (int h = 0; h <= m; ++h) {
              const int col = k * (m + 1) + h;
              const double be = spec.kernel_beta(y, xs[k], ys[h]);
              if (!std::isfinite(be)) bad_eval("kernel_beta", x, y);
              M(row, col) -= W[col] * be;
            }
          break;
        }
        case RowKind::YBoundary: {
          M(row, row) += 1.0;
          for (int k = 0; k <= n; ++k)
            for (int h = 0; h <= m; ++h) {
              const int col = k * (m + 1) + h;
              const double al = spec.kernel_alpha(x, xs[k], ys[h]);
              if (!std::isfinite(al)) bad_eval("kernel_alpha", x, y);
              M(row, col) -= W[col] * al;
            }
          break;
        }
        case RowKind::Dirichlet:
          M(row, row) = 1.0;
          break;
      }
    }
  }
  return M;
}

DiscretePencil assemble(const ModelSpec& spec, const TensorGrid& grid) {
  DiscretePencil p{assemble_B(spec, grid), assemble_M(spec, grid), grid, {}};
  for (int i = 0; i <= grid.gx.degree; ++i)
    for (int j = 0; j <= grid.gy.degree; ++j)
      if (classify(spec, grid, i, j) != RowKind::Interior)
        p.boundary_index_set.push_back(grid.index(i, j));
  return p;  // index set ascends because (i,j) iterates in flat order
}

}  // namespace r0colloc
