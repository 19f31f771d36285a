#include "r0colloc/model.hpp"

#include <cmath>
#include <stdexcept>

#include "r0colloc/age_immunity.hpp"

namespace r0colloc {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

BuiltinModel make_ex1() {
  // Smooth benchmark with nonlocal conditions on both axes. The scaling
  // constant makes e^x sin y an eigenfunction with eigenvalue 1/C.
  const double C = 2.0 / ((kE - 1.0) * (std::sqrt(3.0) - std::sqrt(2.0)));
  ModelSpec s;
  s.name = "ex1";
  s.x_lo = 0.0;
  s.x_hi = 1.0;
  s.y_lo = M_PI / 6.0;
  s.y_hi = M_PI / 4.0;
  s.coeff_a = [](double, double y) { return std::cos(y) / 3.0; };
  s.coeff_b = [](double, double) { return 1.0; };
  s.coeff_c = [](double, double y) { return std::sin(y) / 3.0; };
  s.coeff_d = [](double, double) { return 1.0; };
  s.coeff_mu = [](double, double y) { return std::cos(y) / 3.0; };
  s.kernel_K = [](double x, double y, double, double) {
    return std::exp(x) * std::cos(y) * std::sin(y);
  };
  s.kernel_alpha = [C](double x, double, double) {
    return C * std::exp(x) / 2.0;
  };
  s.kernel_beta = [C](double y, double, double) { return C * std::sin(y); };

  ExactReference ref;
  ref.r0_exact = 1.0 / C;
  ref.eigenfunction_exact = [](double x, double y) {
    return std::exp(x) * std::sin(y);
  };
  ref.r0_reference_note = "closed form (e-1)(sqrt(3)-sqrt(2))/2";
  return {std::move(s), std::move(ref),
          "smooth benchmark, nonlocal conditions on both axes, "
          "eigenfunction e^x sin y"};
}

BuiltinModel make_ex2() {
  ModelSpec s;
  s.name = "ex2";
  s.x_lo = 0.0;
  s.x_hi = 1.0;
  s.y_lo = 0.0;
  s.y_hi = 1.0;
  s.coeff_a = [](double x, double) { return 2.0 * x / 15.0; };
  s.coeff_b = [](double, double) { return 1.0; };
  s.coeff_c = [](double, double y) { return y / 8.0; };
  s.coeff_d = [](double, double) { return 1.0; };
  s.coeff_mu = [](double, double) { return 1.0 / 3.0; };
  s.kernel_K = [](double x, double y, double, double) {
    return std::pow(x, 2.5) * std::pow(y, 8.0 / 3.0);
  };
  s.kernel_alpha = [](double, double, double) { return 0.0; };
  s.kernel_beta = [](double, double, double) { return 0.0; };

  ExactReference ref;
  ref.r0_exact = 6.0 / 77.0;
  ref.eigenfunction_exact = [](double x, double y) {
    return std::pow(x, 2.5) * std::pow(y, 8.0 / 3.0);
  };
  ref.r0_reference_note = "closed form 6/77";
  return {std::move(s), std::move(ref),
          "benchmark with algebraic eigenfunction x^(5/2) y^(8/3), "
          "homogeneous boundary values"};
}

BuiltinModel make_ex3() {
  const double C = 9.0 * kE / (std::pow(2.0, 5.5) * (kE - 1.0));
  ModelSpec s;
  s.name = "ex3";
  s.x_lo = 0.0;
  s.x_hi = 1.0;
  s.y_lo = 0.0;
  s.y_hi = 2.0;
  s.coeff_a = [](double, double) { return 1.0; };
  s.coeff_b = [](double, double) { return 1.0; };
  s.coeff_c = [](double, double y) { return 2.0 * y / 7.0; };
  s.coeff_d = [](double, double) { return 1.0; };
  s.coeff_mu = [](double, double) { return 1.0; };
  s.kernel_K = [](double x, double y, double, double) {
    return std::exp(-x) * std::pow(y, 3.5);
  };
  s.kernel_alpha = [](double, double, double) { return 0.0; };
  s.kernel_beta = [C](double y, double, double) {
    return C * std::pow(y, 3.5);
  };

  ExactReference ref;
  ref.r0_exact = 1.0 / C;
  ref.eigenfunction_exact = [](double x, double y) {
    return std::exp(-x) * std::pow(y, 3.5);
  };
  ref.r0_reference_note = "closed form 2^(11/2)(e-1)/(9e)";
  return {std::move(s), std::move(ref),
          "benchmark with nonlocal condition in x only, eigenfunction "
          "e^-x y^(7/2)"};
}

BuiltinModel make_age_immunity(const std::string& name) {
  AgeImmunityBuiltin b = age_immunity_builtin(name);
  ModelSpec s = to_model_spec(b.spec, b.dfe);
  ExactReference ref;
  ref.r0_exact = b.r0_reference;
  ref.eigenfunction_exact = b.eigenfunction;
  ref.r0_reference_note = b.reference_note;
  ref.r0_self_converged = b.r0_self_converged;
  return {std::move(s), std::move(ref), b.description};
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"ex1", "ex2", "ex3", "ageimm-ex6", "ageimm-ex7"};
}

BuiltinModel builtin(const std::string& name) {
  if (name == "ex1") return make_ex1();
  if (name == "ex2") return make_ex2();
  if (name == "ex3") return make_ex3();
  if (name == "ageimm-ex6" || name == "ageimm-ex7")
    return make_age_immunity(name);
  std::string known;
  for (const auto& n : builtin_names()) known += " " + n;
  throw std::invalid_argument("unknown model '" + name + "'; known:" + known);
}

namespace {

std::string at_node(double x, double y) {
  return " at (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Up to `count` axis indices, evenly spread including both endpoints.
std::vector<int> spread_indices(int degree, int count) {
  std::vector<int> idx;
  const int avail = degree + 1;
  const int take = std::min(avail, count);
  for (int t = 0; t < take; ++t)
    idx.push_back(take == 1 ? 0 : (t * degree + (take - 1) / 2) / (take - 1));
  return idx;
}

}  // namespace

ValidationReport validate(const ModelSpec& spec, const TensorGrid& grid) {
  ValidationReport rep;
  auto error = [&rep](std::string msg) { rep.errors.push_back(std::move(msg)); };
  auto warn = [&rep](std::string msg) { rep.warnings.push_back(std::move(msg)); };

  if (!(spec.x_lo < spec.x_hi))
    error("degenerate x domain: x_lo must be < x_hi");
  if (!(spec.y_lo < spec.y_hi))
    error("degenerate y domain: y_lo must be < y_hi");
  const double sx = 1e-12 * std::max(1.0, std::abs(spec.x_hi - spec.x_lo));
  const double sy = 1e-12 * std::max(1.0, std::abs(spec.y_hi - spec.y_lo));
  if (std::abs(grid.gx.lo - spec.x_lo) > sx ||
      std::abs(grid.gx.hi - spec.x_hi) > sx ||
      std::abs(grid.gy.lo - spec.y_lo) > sy ||
      std::abs(grid.gy.hi - spec.y_hi) > sy)
    error("grid bounds do not match the model domain");
  for (auto [f, n] : {std::pair(&spec.coeff_a, "coeff_a"),
                      std::pair(&spec.coeff_b, "coeff_b"),
                      std::pair(&spec.coeff_c, "coeff_c"),
                      std::pair(&spec.coeff_d, "coeff_d"),
                      std::pair(&spec.coeff_mu, "coeff_mu")})
    if (!*f) error(std::string(n) + " is not set");
  if (!spec.kernel_K) error("kernel_K is not set");
  if (!spec.kernel_alpha) error("kernel_alpha is not set");
  if (!spec.kernel_beta) error("kernel_beta is not set");
  if (!rep.errors.empty()) return rep;

  const auto& xs = grid.gx.nodes;
  const auto& ys = grid.gy.nodes;
  // Kernels take a full source-node lattice per target; subsample sources.
  const auto ks = spread_indices(grid.gx.degree, 8);
  const auto hs = spread_indices(grid.gy.degree, 8);

  struct Negativity {
    int count = 0;
    std::string first;
  };
  Negativity neg_mu, neg_a, neg_c, neg_K, neg_alpha, neg_beta;
  auto check = [](Negativity& n, double v, std::string where) {
    if (v < 0.0) {
      if (n.count == 0) n.first = std::move(where);
      ++n.count;
    }
  };

  for (int i = 0; i <= grid.gx.degree; ++i) {
    for (int j = 0; j <= grid.gy.degree; ++j) {
      const double x = xs[i], y = ys[j];
      if (spec.is_singular_node(x, y)) continue;

      for (auto [f, n] : {std::pair(&spec.coeff_a, "coeff_a"),
                          std::pair(&spec.coeff_b, "coeff_b"),
                          std::pair(&spec.coeff_c, "coeff_c"),
                          std::pair(&spec.coeff_d, "coeff_d"),
                          std::pair(&spec.coeff_mu, "coeff_mu")})
        if (!std::isfinite((*f)(x, y)))
          error(std::string(n) + " is not finite" + at_node(x, y));
      check(neg_mu, spec.coeff_mu(x, y), "coeff_mu" + at_node(x, y));
      check(neg_a, spec.coeff_a(x, y), "coeff_a" + at_node(x, y));
      check(neg_c, spec.coeff_c(x, y), "coeff_c" + at_node(x, y));

      for (int k : ks) {
        for (int h : hs) {
          const double K = spec.kernel_K(x, y, xs[k], ys[h]);
          const double al = spec.kernel_alpha(x, xs[k], ys[h]);
          const double be = spec.kernel_beta(y, xs[k], ys[h]);
          if (!std::isfinite(K))
            error("kernel_K is not finite" + at_node(x, y));
          if (!std::isfinite(al))
            error("kernel_alpha is not finite" + at_node(x, y));
          if (!std::isfinite(be))
            error("kernel_beta is not finite" + at_node(x, y));
          check(neg_K, K, "kernel_K" + at_node(x, y));
          check(neg_alpha, al, "kernel_alpha" + at_node(x, y));
          check(neg_beta, be, "kernel_beta" + at_node(x, y));
          if (rep.errors.size() > 20) return rep;  // avoid error floods
        }
      }
    }
  }

  for (auto [n, name] : {std::pair(&neg_mu, "coeff_mu"),
                         std::pair(&neg_a, "coeff_a"),
                         std::pair(&neg_c, "coeff_c"),
                         std::pair(&neg_K, "kernel_K"),
                         std::pair(&neg_alpha, "kernel_alpha"),
                         std::pair(&neg_beta, "kernel_beta")})
    if (n->count > 0)
      warn(std::string(name) + " is negative at " + std::to_string(n->count) +
           " evaluation(s), first " + n->first);
  return rep;
}

}  // namespace r0colloc
