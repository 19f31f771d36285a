#include "r0colloc/eigensolver.hpp"

#include <cmath>
#include <stdexcept>

namespace r0colloc {

namespace {

// Index of the entry with the largest magnitude.
Eigen::Index argmax_abs(const Eigen::VectorXd& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return idx;
}

R0Result finish(const DiscretePencil& p, double lambda, Eigen::VectorXd v,
                int iterations, double residual_tol, bool iter_converged) {
  v /= v[argmax_abs(v)];  // max-magnitude entry becomes exactly +1
  R0Result r;
  r.r0 = lambda;
  r.eigvec = GridFunction{p.grid, std::move(v)};
  r.residual = residual(p, lambda, r.eigvec);
  r.iterations = iterations;
  r.converged = iter_converged && r.residual <= residual_tol;
  return r;
}

// Full dense eigendecomposition of M^{-1}B; used when power iteration makes
// no progress, which signals a complex-conjugate dominant pair or a zero
// dominant eigenvalue.
R0Result dense_fallback(const DiscretePencil& p,
                        const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                        const EigenOptions& o, int iterations_spent) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(lu.solve(p.B));
  if (es.info() != Eigen::Success)
    throw ConvergenceError("dense eigendecomposition did not converge");
  const auto& vals = es.eigenvalues();
  Eigen::Index imax = 0;
  vals.cwiseAbs().maxCoeff(&imax);
  const std::complex<double> lam = vals[imax];
  if (std::abs(lam.imag()) > std::max(o.tol * std::abs(lam), 1e-300))
    throw ComplexDominantError(
        "dominant eigenvalue is complex: " + std::to_string(lam.real()) +
        (lam.imag() < 0 ? " - " : " + ") +
        std::to_string(std::abs(lam.imag())) + "i");
  Eigen::VectorXd v = es.eigenvectors().col(imax).real();
  if (v.cwiseAbs().maxCoeff() == 0.0)
    v = es.eigenvectors().col(imax).imag();
  return finish(p, lam.real(), std::move(v), iterations_spent, o.residual_tol,
                true);
}

}  // namespace

double residual(const DiscretePencil& p, double lambda,
                const GridFunction& phi) {
  if (phi.values.size() != p.B.rows())
    throw std::invalid_argument("residual: dimension mismatch");
  const double scale = phi.values.cwiseAbs().maxCoeff();
  if (scale == 0.0)
    throw std::invalid_argument("residual: zero eigenvector");
  return (p.B * phi.values - lambda * (p.M * phi.values))
             .cwiseAbs()
             .maxCoeff() /
         scale;
}

R0Result dominant_pair(const DiscretePencil& p, const EigenOptions& o) {
  const Eigen::Index N = p.M.rows();
  if (p.B.rows() != N || p.B.cols() != N || p.M.cols() != N)
    throw std::invalid_argument("dominant_pair: pencil not square");
  if (!(o.tol > 0.0) || o.max_iter < 1)
    throw std::invalid_argument("dominant_pair: bad tolerance or iterations");

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(p.M);
  // The rcond estimate alone misses exact singularity (NaNs vanish inside the
  // norm estimator), so also inspect the U-factor diagonal directly.
  const Eigen::VectorXd udiag = lu.matrixLU().diagonal().cwiseAbs();
  if (!(lu.rcond() >= 1e-14) ||
      !(udiag.minCoeff() > 1e-14 * udiag.maxCoeff()))
    throw SingularOperatorError(
        "transition matrix is numerically singular (rcond < 1e-14)");

  // Deterministic start: ones outside the boundary rows, one map step.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(N);
  for (int k : p.boundary_index_set) v[k] = 0.0;
  Eigen::VectorXd w = lu.solve(p.B * v);
  if (w.cwiseAbs().maxCoeff() == 0.0)  // birth operator vanishes identically
    return finish(p, 0.0, std::move(v), 1, o.residual_tol, true);

  Eigen::Index pivot = argmax_abs(w);
  v = w / w[pivot];
  double lambda = w[pivot];
  for (int it = 2; it <= o.max_iter; ++it) {
    w = lu.solve(p.B * v);
    const double lambda_next = w[pivot];  // v[pivot] == 1
    if (w.cwiseAbs().maxCoeff() == 0.0)
      return dense_fallback(p, lu, o, it);
    pivot = argmax_abs(w);
    w /= w[pivot];
    const bool done = std::abs(lambda_next - lambda) <=
                          o.tol * std::max(std::abs(lambda_next), 1e-300) &&
                      (w - v).cwiseAbs().maxCoeff() <= o.tol;
    lambda = lambda_next;
    v.swap(w);
    if (done) return finish(p, lambda, std::move(v), it, o.residual_tol, true);
  }
  return dense_fallback(p, lu, o, o.max_iter);
}

R0Result dominant_pair(const DiscretePencil& p, double tol, int max_iter) {
  EigenOptions o;
  o.tol = tol;
  o.max_iter = max_iter;
  return dominant_pair(p, o);
}

std::pair<GridFunction, double> match_exact(const GridFunction& phi_num,
                                            const Coefficient& phi_exact) {
  if (!phi_exact) throw std::invalid_argument("match_exact: no exact function");
  const Grid1D& gx = phi_num.grid.gx;
  const Grid1D& gy = phi_num.grid.gy;
  constexpr int kPts = 101;  // fixed uniform evaluation lattice

  double best = 0.0, best_x = gx.lo, best_y = gy.lo;
  for (int s = 0; s < kPts; ++s) {
    const double x = gx.lo + s * (gx.hi - gx.lo) / (kPts - 1);
    for (int t = 0; t < kPts; ++t) {
      const double y = gy.lo + t * (gy.hi - gy.lo) / (kPts - 1);
      const double e = std::abs(phi_exact(x, y));
      if (e > best) {
        best = e;
        best_x = x;
        best_y = y;
      }
    }
  }
  if (best == 0.0)
    throw std::invalid_argument(
        "match_exact: exact function vanishes on the evaluation grid");

  const double at_peak = interp2(phi_num, best_x, best_y);
  if (at_peak == 0.0)
    throw NumericalError(
        "match_exact: numeric eigenfunction vanishes at the matching point");
  const double scale = phi_exact(best_x, best_y) / at_peak;

  GridFunction scaled{phi_num.grid, phi_num.values * scale};
  double sup = 0.0;
  for (int s = 0; s < kPts; ++s) {
    const double x = gx.lo + s * (gx.hi - gx.lo) / (kPts - 1);
    for (int t = 0; t < kPts; ++t) {
      const double y = gy.lo + t * (gy.hi - gy.lo) / (kPts - 1);
      sup = std::max(sup, std::abs(interp2(scaled, x, y) - phi_exact(x, y)));
    }
  }
  return {std::move(scaled), sup};
}

}  // namespace r0colloc
