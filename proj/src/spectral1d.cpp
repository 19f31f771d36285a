#include "r0colloc/spectral1d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace r0colloc {

namespace {

void check_interval(int degree, double lo, double hi) {
  if (degree < 1)
    throw std::invalid_argument("grid degree must be >= 1, got " +
                                std::to_string(degree));
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("grid interval must be finite");
  if (!(lo < hi))
    throw std::invalid_argument("grid interval must satisfy lo < hi");
}

void check_nodes(const Eigen::VectorXd& nodes) {
  if (nodes.size() < 2)
    throw std::invalid_argument("need at least 2 nodes");
  for (Eigen::Index i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1]))
      throw std::invalid_argument("nodes must be strictly increasing");
}

}  // namespace

Eigen::VectorXd cheb_nodes(int degree, double lo, double hi) {
  check_interval(degree, lo, hi);
  const int n = degree;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Eigen::VectorXd x(n + 1);
  for (int i = 0; i <= n; ++i)
    x[i] = mid - half * std::cos(i * M_PI / n);
  // cos() is not exact at 0 and pi; pin the endpoints.
  x[0] = lo;
  x[n] = hi;
  return x;
}

Eigen::VectorXd cc_weights(int degree, double lo, double hi) {
  check_interval(degree, lo, hi);
  const int n = degree;
  Eigen::VectorXd w(n + 1);
  const double scale = 0.5 * (hi - lo);

  if (n == 1) {
    w[0] = w[1] = scale;  // trapezoid rule
    return w;
  }

  // Closed form on [-1,1]: endpoint weight 1/(n^2-1) for even n, 1/n^2 for
  // odd n; interior weights from the cosine sum
  //   v_i = 1 - sum_{k=1}^{K} 2 cos(2k theta_i)/(4k^2-1)  [- extra term, n even]
  // with theta_i = i pi / n.  Symmetric, so node ordering does not matter.
  const bool even = (n % 2 == 0);
  const double wend = even ? 1.0 / (double(n) * n - 1.0) : 1.0 / (double(n) * n);
  w[0] = w[n] = wend;
  const int K = even ? n / 2 - 1 : (n - 1) / 2;
  for (int i = 1; i < n; ++i) {
    const double theta = i * M_PI / n;
    double v = 1.0;
    for (int k = 1; k <= K; ++k)
      v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * double(k) * k - 1.0);
    if (even) v -= std::cos(n * theta) / (double(n) * n - 1.0);
    w[i] = 2.0 * v / n;
  }
  return w * scale;
}

Eigen::VectorXd bary_weights(const Eigen::VectorXd& nodes) {
  check_nodes(nodes);
  const Eigen::Index n = nodes.size();
  // Scale each factor by 4/(hi-lo) (the inverse logarithmic capacity of the
  // interval) so products stay in range even for hundreds of nodes.
  const double cap = 4.0 / (nodes[n - 1] - nodes[0]);
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double p = 1.0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) p *= (nodes[i] - nodes[j]) * cap;
    w[i] = 1.0 / p;
  }
  w /= w.cwiseAbs().maxCoeff();
  return w;
}

Eigen::MatrixXd diff_matrix(const Eigen::VectorXd& nodes) {
  check_nodes(nodes);
  const Eigen::Index n = nodes.size();
  const Eigen::VectorXd w = bary_weights(nodes);
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      d(i, j) = (w[j] / w[i]) / (nodes[i] - nodes[j]);
      rowsum += d(i, j);
    }
    // Negative row sum makes D annihilate constants exactly, which is more
    // accurate than the analytic diagonal formula.
    d(i, i) = -rowsum;
  }
  return d;
}

double interp1(const Eigen::VectorXd& nodes, const Eigen::VectorXd& bary,
               const Eigen::VectorXd& values, double x) {
  const Eigen::Index n = nodes.size();
  if (bary.size() != n || values.size() != n)
    throw std::invalid_argument("interp1: size mismatch");
  const double tol = 1e-14 * (nodes[n - 1] - nodes[0]);
  double num = 0.0, den = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double dx = x - nodes[j];
    if (std::abs(dx) <= tol) return values[j];
    const double t = bary[j] / dx;
    num += t * values[j];
    den += t;
  }
  return num / den;
}

Grid1D Grid1D::chebyshev(int degree, double lo, double hi) {
  Grid1D g;
  g.lo = lo;
  g.hi = hi;
  g.degree = degree;
  g.nodes = cheb_nodes(degree, lo, hi);
  g.quad_weights = cc_weights(degree, lo, hi);
  g.diff = diff_matrix(g.nodes);
  g.bary = bary_weights(g.nodes);
  return g;
}

}  // namespace r0colloc
