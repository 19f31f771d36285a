#pragma once

#include <functional>
#include <optional>
#include <string>

#include "r0colloc/model.hpp"

namespace r0colloc {

/// Immunity waning rate g(w) >= 0: the immunity level of an individual
/// follows w'(a) = -g(w(a)) as it ages. When g is linear the characteristic
/// curves have closed forms, recorded via the linear field.
struct Waning {
  std::function<double(double)> value;
  std::function<double(double)> deriv;

  struct Linear {
    double slope = 0.0;      ///< g(w) = slope*w + intercept
    double intercept = 0.0;
  };
  std::optional<Linear> linear;

  static Waning linear_rate(double slope, double intercept);
};

/// Natural per-capita mortality mu(a) on [0, a_max]. Registered forms carry
/// closed-form integrals; Custom falls back to adaptive quadrature.
struct Mortality {
  enum class Form {
    Custom,
    Constant,            ///< mu(a) = constant
    InverseSquareToMax,  ///< mu(a) = 1/(a_max - a)^2, singular at a_max
  };

  std::function<double(double)> value;
  Form form = Form::Custom;
  double constant = 0.0;
  bool singular_at_a_max = false;

  static Mortality constant_rate(double mu);
  static Mortality inverse_square_to_max(double a_max);
};

/// An age- and immunity-structured epidemic model. Individuals age with
/// waning immunity w, die at rate mu(a), recover from infection at rate
/// gamma, are born with immunity distributed as birth(w), get infected with
/// probability beta_inf(w) upon contact, and transmit with infectivity
/// nu(w).
struct AgeImmunitySpec {
  std::string name;
  double a_max = 1.0;  ///< maximum age
  double gamma = 1.0;  ///< recovery rate, > 0
  Waning g;
  Mortality mu;
  std::function<double(double)> birth;     ///< newborn immunity density
  std::function<double(double)> beta_inf;  ///< infection probability
  std::function<double(double)> nu;        ///< infectivity
};

/// The infection-free stationary population profile.
struct DFEProfile {
  enum class Provenance { ClosedForm, Numeric };

  /// Susceptible density s(a,w); zero above the separating characteristic.
  std::function<double(double, double)> s_bar;
  /// Immunity level at age a of the curve started at (0,1); s_bar vanishes
  /// for w above this curve (no individual is born with immunity > 1).
  std::function<double(double)> w_star;
  Provenance provenance = Provenance::Numeric;
};

/// Immunity level at age a of the characteristic through (a0, w0).
/// Closed form for linear waning, otherwise fixed-step 4th-order
/// integration. Requires 0 <= a0 <= a and 0 <= w0 <= 1.
double characteristic(const AgeImmunitySpec& spec, double a0, double w0,
                      double a);

/// Builds the infection-free profile by transporting the birth density
/// along characteristics. Uses closed forms when both the waning and the
/// mortality have registered forms.
DFEProfile dfe(const AgeImmunitySpec& spec);

/// Probability that an individual infected at age xi is still alive and
/// infected at age a: exp(-integral of [mu + gamma] over [xi, a]).
/// Closed form for registered mortalities, else adaptive quadrature.
double survival_T(const AgeImmunitySpec& spec, double xi, double a);

/// Reproduction number by direct nested quadrature of the infection cycle:
/// expected transmissions weighted by nu, integrated over the infectious
/// lifetime against the susceptible profile. Independent of the collocation
/// pipeline; absolute accuracy ~1e-9. The w integration is split at the
/// separating characteristic where s_bar loses smoothness.
double oracle_r0(const AgeImmunitySpec& spec, const DFEProfile& dfe);

/// Adapts the linearized infected equation to the generic two-structure
/// form: x := age on [0, a_max], y := immunity on [0, 1], transport purely
/// in age, kernel K(a,w,xi,omega) = beta_inf(w) s_bar(a,w) nu(omega), zero
/// boundary values at a = 0 and w = 1. Marks a = a_max as a Dirichlet node
/// when the mortality is singular there.
ModelSpec to_model_spec(const AgeImmunitySpec& spec, const DFEProfile& dfe);

/// A ready-to-run built-in instance with its reference data.
struct AgeImmunityBuiltin {
  AgeImmunitySpec spec;
  DFEProfile dfe;
  std::optional<double> r0_reference;
  std::function<double(double, double)> eigenfunction;  ///< empty when unknown
  std::string reference_note;
  std::string description;
  /// True when r0_reference is itself a high-resolution collocation output
  /// rather than a closed form; convergence studies recompute it.
  bool r0_self_converged = false;
};

/// Built-in instances; names match the model registry ("ageimm-ex6",
/// "ageimm-ex7"). Throws std::invalid_argument for unknown names.
AgeImmunityBuiltin age_immunity_builtin(const std::string& name);

}  // namespace r0colloc
