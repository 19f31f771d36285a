#include "r0colloc/age_immunity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace r0colloc {

namespace {

// Classical 4th-order step for the autonomous rate w' = f(w), from t=0 to
// t=span. Step <= 0.002, so the local error stays near 1e-13 for the unit-
// scale rates used here.
double rk4_autonomous(const std::function<double(double)>& f, double w0,
                      double span) {
  if (span == 0.0) return w0;
  const int steps = std::max(16, int(std::ceil(span / 0.002)));
  const double h = span / steps;
  double w = w0;
  for (int s = 0; s < steps; ++s) {
    const double k1 = f(w);
    const double k2 = f(w + 0.5 * h * k1);
    const double k3 = f(w + 0.5 * h * k2);
    const double k4 = f(w + h * k3);
    w += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return w;
}

}  // namespace

Waning Waning::linear_rate(double slope, double intercept) {
  Waning g;
  g.value = [slope, intercept](double w) { return slope * w + intercept; };
  g.deriv = [slope](double) { return slope; };
  g.linear = Linear{slope, intercept};
  return g;
}

Mortality Mortality::constant_rate(double mu) {
  Mortality m;
  m.value = [mu](double) { return mu; };
  m.form = Form::Constant;
  m.constant = mu;
  return m;
}

Mortality Mortality::inverse_square_to_max(double a_max) {
  Mortality m;
  m.value = [a_max](double a) {
    const double d = a_max - a;
    return 1.0 / (d * d);
  };
  m.form = Form::InverseSquareToMax;
  m.singular_at_a_max = true;
  return m;
}

double characteristic(const AgeImmunitySpec& spec, double a0, double w0,
                      double a) {
  if (w0 < 0.0 || w0 > 1.0)
    throw std::invalid_argument("characteristic: w0 outside [0,1]");
  if (a0 < 0.0 || a < a0 || a > spec.a_max * (1.0 + 1e-12))
    throw std::invalid_argument("characteristic: need 0 <= a0 <= a <= a_max");

  if (spec.g.linear) {
    const double s = spec.g.linear->slope, q = spec.g.linear->intercept;
    if (s == 0.0) return w0 - q * (a - a0);
    return (w0 + q / s) * std::exp(-s * (a - a0)) - q / s;
  }
  const auto& g = spec.g.value;
  return rk4_autonomous([&g](double w) { return -g(w); }, w0, a - a0);
}

DFEProfile dfe(const AgeImmunitySpec& spec) {
  DFEProfile p;
  const double a_max = spec.a_max;
  p.w_star = [spec](double a) { return characteristic(spec, 0.0, 1.0, a); };

  const bool closed_form =
      spec.g.linear.has_value() && (spec.mu.form == Mortality::Form::Constant ||
                                    spec.mu.form ==
                                        Mortality::Form::InverseSquareToMax);
  if (closed_form) {
    const double s = spec.g.linear->slope, q = spec.g.linear->intercept;
    const auto form = spec.mu.form;
    const double mu0 = spec.mu.constant;
    const bool singular = spec.mu.singular_at_a_max;
    auto birth = spec.birth;
    auto w_star = p.w_star;
    p.s_bar = [=](double a, double w) {
      if (singular && a >= a_max) return 0.0;  // limit value at the edge
      if (w > w_star(a)) return 0.0;
      // Root of the characteristic through (a, w), clamped to the
      // smooth-branch side against rounding on the separating curve.
      double w0 = (s == 0.0) ? w + q * a
                             : (w + q / s) * std::exp(s * a) - q / s;
      w0 = std::min(w0, 1.0);
      const double imu = (form == Mortality::Form::Constant)
                             ? mu0 * a
                             : 1.0 / (a_max - a) - 1.0 / a_max;
      // Density change along the curve: d/da log(sbar) = g' - mu, and g'
      // is the constant s for linear waning.
      return birth(w0) * std::exp(s * a - imu);
    };
    p.provenance = DFEProfile::Provenance::ClosedForm;
    return p;
  }

  auto w_star = p.w_star;
  p.s_bar = [spec, w_star, a_max](double a, double w) {
    if (spec.mu.singular_at_a_max && a >= a_max * (1.0 - 1e-12)) return 0.0;
    if (w > w_star(a)) return 0.0;
    const auto& g = spec.g.value;
    const double w0 =
        rk4_autonomous([&g](double v) { return g(v); }, w, a);  // backward
    if (w0 > 1.0) return 0.0;
    // Forward again, accumulating log-density: (w, L)' = (-g, g'(w) - mu).
    const int steps = std::max(16, int(std::ceil(a / 0.002)));
    const double h = a / double(std::max(steps, 1));
    double v = w0, L = 0.0;
    for (int st = 0; st < steps && a > 0.0; ++st) {
      const double t = st * h;
      auto fw = [&](double vv) { return -g(vv); };
      auto fL = [&](double tt, double vv) {
        return spec.g.deriv(vv) - spec.mu.value(tt);
      };
      const double k1w = fw(v), k1L = fL(t, v);
      const double k2w = fw(v + 0.5 * h * k1w),
                   k2L = fL(t + 0.5 * h, v + 0.5 * h * k1w);
      const double k3w = fw(v + 0.5 * h * k2w),
                   k3L = fL(t + 0.5 * h, v + 0.5 * h * k2w);
      const double k4w = fw(v + h * k3w), k4L = fL(t + h, v + h * k3w);
      v += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
      L += h / 6.0 * (k1L + 2.0 * k2L + 2.0 * k3L + k4L);
    }
    return spec.birth(w0) * std::exp(L);
  };
  p.provenance = DFEProfile::Provenance::Numeric;
  return p;
}

double survival_T(const AgeImmunitySpec& spec, double xi, double a) {
  if (xi < 0.0 || a < xi || a > spec.a_max * (1.0 + 1e-12))
    throw std::invalid_argument("survival_T: need 0 <= xi <= a <= a_max");
  double imu;
  switch (spec.mu.form) {
    case Mortality::Form::Constant:
      imu = spec.mu.constant * (a - xi);
      break;
    case Mortality::Form::InverseSquareToMax: {
      const double da = spec.a_max - a;
      if (da <= 0.0) return 0.0;  // nobody survives to the maximum age
      imu = 1.0 / da - 1.0 / (spec.a_max - xi);
      break;
    }
    case Mortality::Form::Custom:
    default:
      imu = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          spec.mu.value, xi, a, 12, 1e-12);
      break;
  }
  return std::exp(-spec.gamma * (a - xi) - imu);
}

namespace {

// Largest age whose separating-characteristic immunity is still >= omega;
// bisection on the non-increasing curve. s_bar(., omega) vanishes beyond it.
double age_cutoff(const std::function<double(double)>& w_star, double a_max,
                  double omega) {
  if (w_star(a_max) >= omega) return a_max;
  double lo = 0.0, hi = a_max;
  for (int it = 0; it < 100 && hi - lo > 1e-15 * a_max; ++it) {
    const double mid = 0.5 * (lo + hi);
    (w_star(mid) >= omega ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double oracle_r0(const AgeImmunitySpec& spec, const DFEProfile& dfe) {
  using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double a_max = spec.a_max;

  // Transmissions caused at all ages xi by one individual infected at age b,
  // integrated over the infection ages b weighted by the susceptibles s_bar.
  auto infections = [&](double omega) {
    const double cutoff = age_cutoff(dfe.w_star, a_max, omega);
    auto by_age = [&](double xi) {
      const double b_hi = std::min(xi, cutoff);
      if (b_hi <= 0.0) return 0.0;
      auto f = [&](double b) {
        return survival_T(spec, b, xi) * dfe.s_bar(b, omega);
      };
      return gk::integrate(f, 0.0, b_hi, 12, 1e-12);
    };
    double J = 0.0;
    if (cutoff < a_max) {  // kink of min(xi, cutoff) at xi = cutoff
      J += gk::integrate(by_age, 0.0, cutoff, 12, 1e-12);
      J += gk::integrate(by_age, cutoff, a_max, 12, 1e-12);
    } else {
      J = gk::integrate(by_age, 0.0, a_max, 12, 1e-12);
    }
    return J;
  };
  auto weighted = [&](double omega) {
    return spec.nu(omega) * spec.beta_inf(omega) * infections(omega);
  };

  // Split the immunity axis where the age cutoff starts to bite; s_bar is
  // only piecewise smooth across the separating characteristic.
  const double split = std::clamp(dfe.w_star(a_max), 0.0, 1.0);
  double r0 = 0.0;
  if (split > 1e-14) r0 += gk::integrate(weighted, 0.0, split, 12, 1e-11);
  if (split < 1.0 - 1e-14) r0 += gk::integrate(weighted, split, 1.0, 12, 1e-11);
  return r0;
}

ModelSpec to_model_spec(const AgeImmunitySpec& spec, const DFEProfile& dfe) {
  ModelSpec m;
  m.name = spec.name;
  m.x_lo = 0.0;
  m.x_hi = spec.a_max;
  m.y_lo = 0.0;
  m.y_hi = 1.0;
  m.coeff_a = [](double, double) { return 1.0; };
  m.coeff_b = [](double, double) { return 1.0; };
  m.coeff_c = [](double, double) { return 0.0; };
  m.coeff_d = [](double, double) { return 1.0; };
  m.coeff_mu = [mu = spec.mu.value, gamma = spec.gamma](double a, double) {
    return mu(a) + gamma;
  };
  m.kernel_K = [beta = spec.beta_inf, sbar = dfe.s_bar,
                nu = spec.nu](double a, double w, double, double omega) {
    return beta(w) * sbar(a, w) * nu(omega);
  };
  m.kernel_alpha = [](double, double, double) { return 0.0; };
  m.kernel_beta = [](double, double, double) { return 0.0; };
  m.x_bc_side = BoundarySide::Low;   // infected enter at age 0 with value 0
  m.y_bc_side = BoundarySide::High;  // nobody carries immunity above 1
  if (spec.mu.singular_at_a_max) {
    const double edge = spec.a_max * (1.0 - 1e-12);
    m.singular_dirichlet_nodes = [edge](double x, double) {
      return x >= edge;
    };
  }
  return m;
}

AgeImmunityBuiltin age_immunity_builtin(const std::string& name) {
  if (name == "ageimm-ex6") {
    AgeImmunitySpec s;
    s.name = name;
    s.a_max = 2.0;
    s.gamma = 1.0;
    s.g = Waning::linear_rate(-1.0, 1.0);  // g(w) = 1 - w
    s.mu = Mortality::constant_rate(1.0);
    s.birth = [](double w) { return (1.0 - w) * (1.0 - w); };
    s.beta_inf = [](double w) { return 1.0 - w; };
    s.nu = [](double w) { return 1.0 - w; };

    AgeImmunityBuiltin b;
    b.dfe = dfe(s);
    b.spec = std::move(s);
    b.r0_reference = (1.0 - 2.0 * std::exp(-4.0) + std::exp(-8.0)) / 40.0;
    b.eigenfunction = [](double a, double w) {
      const double t = 1.0 - w, e = std::exp(-2.0 * a);
      return 0.5 * t * t * t * e * (1.0 - e);
    };
    b.reference_note = "closed form (1 - 2e^-4 + e^-8)/40";
    b.description =
        "age-immunity model: waning rate 1-w, constant mortality; "
        "closed-form equilibrium and eigenpair";
    return b;
  }
  if (name == "ageimm-ex7") {
    AgeImmunitySpec s;
    s.name = name;
    s.a_max = 2.0;
    s.gamma = 1.0;
    s.g = Waning::linear_rate(1.0, 0.0);  // g(w) = w
    s.mu = Mortality::inverse_square_to_max(2.0);
    s.birth = [](double w) { return (1.0 - w) * (1.0 - w); };
    s.beta_inf = [](double w) { return 1.0 - w; };
    s.nu = [](double w) { return 1.0 - w; };

    AgeImmunityBuiltin b;
    b.dfe = dfe(s);
    b.spec = std::move(s);
    b.r0_reference = 0.111258187908847;
    b.eigenfunction = {};
    b.reference_note = "self-converged collocation reference at n=m=100";
    b.r0_self_converged = true;
    b.description =
        "age-immunity model: waning rate w, mortality 1/(2-a)^2 unbounded "
        "at the maximum age; finite-order convergence";
    return b;
  }
  throw std::invalid_argument("unknown age-immunity model '" + name +
                              "'; known: ageimm-ex6 ageimm-ex7");
}

}  // namespace r0colloc
