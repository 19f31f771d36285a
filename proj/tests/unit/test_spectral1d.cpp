#include "r0colloc/spectral1d.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using r0colloc::Grid1D;

namespace {

// Evaluates a polynomial given by coefficients (constant term first).
double polyval(const Eigen::VectorXd& c, double x) {
  double r = 0.0;
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) r = r * x + c[k];
  return r;
}

Eigen::VectorXd polyder(const Eigen::VectorXd& c) {
  if (c.size() <= 1) return Eigen::VectorXd::Zero(1);
  Eigen::VectorXd d(c.size() - 1);
  for (Eigen::Index k = 1; k < c.size(); ++k) d[k - 1] = k * c[k];
  return d;
}

}  // namespace

TEST_CASE("chebyshev nodes: known values") {
  const auto x1 = r0colloc::cheb_nodes(1, 0.0, 1.0);
  REQUIRE(x1.size() == 2);
  CHECK(x1[0] == 0.0);
  CHECK(x1[1] == 1.0);

  const auto x2 = r0colloc::cheb_nodes(2, -1.0, 1.0);
  REQUIRE(x2.size() == 3);
  CHECK(x2[0] == -1.0);
  CHECK(std::abs(x2[1]) <= 1e-16);
  CHECK(x2[2] == 1.0);

  const auto x4 = r0colloc::cheb_nodes(4, 0.0, 2.0);
  const double s = std::sqrt(2.0) / 2.0;
  REQUIRE(x4.size() == 5);
  CHECK(x4[0] == 0.0);
  CHECK(x4[1] == doctest::Approx(1.0 - s).epsilon(1e-15));
  CHECK(x4[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x4[3] == doctest::Approx(1.0 + s).epsilon(1e-15));
  CHECK(x4[4] == 2.0);
}

TEST_CASE("chebyshev nodes: ascending with exact endpoints") {
  for (int n : {1, 2, 3, 7, 16, 41}) {
    const auto x = r0colloc::cheb_nodes(n, -0.3, 2.7);
    CHECK(x[0] == -0.3);
    CHECK(x[n] == 2.7);
    for (int i = 0; i < n; ++i) CHECK(x[i] < x[i + 1]);
  }
}

TEST_CASE("clenshaw-curtis weights: known values") {
  const auto w1 = r0colloc::cc_weights(1, 0.0, 3.0);
  CHECK(w1[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(w1[1] == doctest::Approx(1.5).epsilon(1e-15));

  const auto w2 = r0colloc::cc_weights(2, -1.0, 1.0);
  CHECK(w2[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(w2[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(w2[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("clenshaw-curtis weights: polynomial exactness") {
  // Degree-n Clenshaw-Curtis integrates polynomials up to degree n exactly.
  for (int n : {1, 2, 3, 4, 5, 8, 11, 16}) {
    const double lo = -0.5, hi = 2.0;
    const auto x = r0colloc::cheb_nodes(n, lo, hi);
    const auto w = r0colloc::cc_weights(n, lo, hi);
    for (int p = 0; p <= n; ++p) {
      double q = 0.0;
      for (int i = 0; i <= n; ++i) q += w[i] * std::pow(x[i], p);
      const double exact =
          (std::pow(hi, p + 1) - std::pow(lo, p + 1)) / (p + 1);
      CHECK(std::abs(q - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("clenshaw-curtis weights: positive, symmetric, sum to length") {
  for (int n : {1, 2, 5, 10, 33, 64}) {
    const auto w = r0colloc::cc_weights(n, 0.25, 1.75);
    CHECK(w.sum() == doctest::Approx(1.5).epsilon(1e-14));
    for (int i = 0; i <= n; ++i) {
      CHECK(w[i] > 0.0);
      CHECK(w[i] == doctest::Approx(w[n - i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("barycentric weights: known patterns") {
  Eigen::VectorXd two(2);
  two << 0.0, 1.0;
  const auto w2 = r0colloc::bary_weights(two);
  CHECK(w2[0] == doctest::Approx(-1.0));
  CHECK(w2[1] == doctest::Approx(1.0));

  Eigen::VectorXd three(3);
  three << -1.0, 0.0, 1.0;
  const auto w3 = r0colloc::bary_weights(three);
  // Proportional to (1/2, -1, 1/2); normalization puts the middle at -1.
  CHECK(w3[0] == doctest::Approx(0.5));
  CHECK(w3[1] == doctest::Approx(-1.0));
  CHECK(w3[2] == doctest::Approx(0.5));
}

TEST_CASE("barycentric weights: no overflow for large grids") {
  const auto x = r0colloc::cheb_nodes(200, 0.0, 2.0);
  const auto w = r0colloc::bary_weights(x);
  CHECK(w.cwiseAbs().maxCoeff() == 1.0);
  CHECK(w.cwiseAbs().minCoeff() > 1e-8);  // Chebyshev weights vary mildly
  for (int i = 0; i < w.size(); ++i) CHECK(std::isfinite(w[i]));
}

TEST_CASE("differentiation matrix: known values") {
  Eigen::VectorXd two(2);
  two << 0.0, 1.0;
  const auto d2 = r0colloc::diff_matrix(two);
  CHECK(d2(0, 0) == doctest::Approx(-1.0));
  CHECK(d2(0, 1) == doctest::Approx(1.0));
  CHECK(d2(1, 0) == doctest::Approx(-1.0));
  CHECK(d2(1, 1) == doctest::Approx(1.0));

  Eigen::VectorXd three(3);
  three << -1.0, 0.0, 1.0;
  const auto d3 = r0colloc::diff_matrix(three);
  Eigen::VectorXd sq(3), expect(3);
  sq << 1.0, 0.0, 1.0;  // x^2 at the nodes
  expect << -2.0, 0.0, 2.0;
  const Eigen::VectorXd got = d3 * sq;
  for (int i = 0; i < 3; ++i)
    CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-14));
}

TEST_CASE("differentiation matrix: exact on random polynomials") {
  std::mt19937 rng(20260825);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int n : {2, 5, 9, 16, 24, 40}) {
    const auto x = r0colloc::cheb_nodes(n, -1.0, 2.0);
    const auto d = r0colloc::diff_matrix(x);
    Eigen::VectorXd c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = coef(rng);
    Eigen::VectorXd p(n + 1), dp(n + 1);
    const Eigen::VectorXd cd = polyder(c);
    for (int i = 0; i <= n; ++i) {
      p[i] = polyval(c, x[i]);
      dp[i] = polyval(cd, x[i]);
    }
    const double err = (d * p - dp).cwiseAbs().maxCoeff();
    // Conditioning of D grows like n^2; allow for it.
    CHECK(err <= 1e-12 * double(n) * n * std::max(1.0, dp.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("differentiation matrix: rows sum to zero") {
  const auto x = r0colloc::cheb_nodes(12, 0.0, 5.0);
  const auto d = r0colloc::diff_matrix(x);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(13);
  // The diagonal is the negative off-diagonal sum; only summation order
  // differs in D * ones, so the result is zero to rounding.
  CHECK((d * ones).cwiseAbs().maxCoeff() <= 1e-13 * d.cwiseAbs().maxCoeff());
}

TEST_CASE("grid construction is affine covariant") {
  const int n = 9;
  const double lo = 1.5, hi = 4.5;
  const auto ref = Grid1D::chebyshev(n, -1.0, 1.0);
  const auto g = Grid1D::chebyshev(n, lo, hi);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (lo + hi);
  for (int i = 0; i <= n; ++i) {
    CHECK(g.nodes[i] == doctest::Approx(mid + half * ref.nodes[i]).epsilon(1e-14));
    CHECK(g.quad_weights[i] ==
          doctest::Approx(half * ref.quad_weights[i]).epsilon(1e-14));
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      CHECK(g.diff(i, j) == doctest::Approx(ref.diff(i, j) / half)
                                .epsilon(1e-12)
                                .scale(std::abs(ref.diff(i, j)) + 1.0));
}

TEST_CASE("interp1: reproduces interpolating polynomial") {
  const auto g = Grid1D::chebyshev(10, 0.0, 2.0);
  Eigen::VectorXd v(11);
  for (int i = 0; i <= 10; ++i)
    v[i] = 1.0 + g.nodes[i] * (2.0 - g.nodes[i] * g.nodes[i]);
  // Exact at nodes, including under tiny perturbations.
  for (int i = 0; i <= 10; ++i)
    CHECK(r0colloc::interp1(g.nodes, g.bary, v, g.nodes[i]) == v[i]);
  // Exact (to rounding) between nodes since the sample is a cubic.
  for (double x : {0.05, 0.4, 1.1, 1.93}) {
    const double want = 1.0 + x * (2.0 - x * x);
    CHECK(r0colloc::interp1(g.nodes, g.bary, v, x) ==
          doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("interp1: converges spectrally for smooth samples") {
  double prev = 1.0;
  for (int n : {4, 8, 16, 32}) {
    const auto g = Grid1D::chebyshev(n, -1.0, 1.0);
    Eigen::VectorXd v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = std::exp(g.nodes[i]);
    double err = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double x = -1.0 + 0.02 * k;
      err = std::max(err,
                     std::abs(r0colloc::interp1(g.nodes, g.bary, v, x) -
                              std::exp(x)));
    }
    CHECK((err < prev || err < 1e-14));  // decreasing until rounding floor
    prev = err;
  }
  CHECK(prev < 1e-13);
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(r0colloc::cheb_nodes(0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(r0colloc::cheb_nodes(4, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(r0colloc::cheb_nodes(4, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(r0colloc::cc_weights(3, 0.0, std::nan("")),
                  std::invalid_argument);

  Eigen::VectorXd bad(3);
  bad << 0.0, 2.0, 1.0;
  CHECK_THROWS_AS(r0colloc::diff_matrix(bad), std::invalid_argument);
  CHECK_THROWS_AS(r0colloc::bary_weights(bad), std::invalid_argument);
  Eigen::VectorXd dup(3);
  dup << 0.0, 1.0, 1.0;
  CHECK_THROWS_AS(r0colloc::diff_matrix(dup), std::invalid_argument);
}
