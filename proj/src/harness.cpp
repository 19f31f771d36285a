#include "r0colloc/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "r0colloc/assembly.hpp"

namespace r0colloc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shortest decimal that round-trips to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

SolveResult solve_spec(const BuiltinModel& model, int n, int m, double tol) {
  const auto grid = TensorGrid::chebyshev(n, m, model.spec.x_lo,
                                          model.spec.x_hi, model.spec.y_lo,
                                          model.spec.y_hi);
  const auto report = validate(model.spec, grid);
  if (!report.ok()) {
    std::string msg = "model '" + model.spec.name + "' failed validation:";
    for (const auto& e : report.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  EigenOptions opts;
  opts.tol = tol;
  const auto r = dominant_pair(assemble(model.spec, grid), opts);
  return {r.r0, r.residual, r.iterations, r.converged, r.eigvec};
}

}  // namespace

SolveResult solve_builtin(const std::string& model, int n, int m, double tol) {
  return solve_spec(builtin(model), n, m, tol);
}

ConvergenceReport run_convergence(const std::string& model,
                                  const std::vector<int>& sizes,
                                  int self_reference_size) {
  if (sizes.empty())
    throw std::invalid_argument("run_convergence: empty size list");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 2)
      throw std::invalid_argument("run_convergence: sizes must be >= 2");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      throw std::invalid_argument("run_convergence: sizes must be ascending");
  }

  const BuiltinModel mdl = builtin(model);
  ConvergenceReport rep;
  rep.model = model;

  if (mdl.reference.r0_exact && !mdl.reference.r0_self_converged) {
    rep.reference_r0 = *mdl.reference.r0_exact;
    rep.reference_note = mdl.reference.r0_reference_note;
  } else {
    // No closed form: recompute the reference with this same method at a
    // resolution well beyond the sweep. Failure here is fatal since every
    // error column depends on it.
    if (self_reference_size <= sizes.back())
      throw std::invalid_argument(
          "run_convergence: self-reference size must exceed the sweep");
    const auto ref = solve_spec(mdl, self_reference_size,
                                self_reference_size, EigenOptions{}.tol);
    rep.reference_r0 = ref.r0;
    rep.reference_note = "self-converged collocation reference at n=m=" +
                         std::to_string(self_reference_size);
  }

  const bool have_phi = bool(mdl.reference.eigenfunction_exact);
  for (int s : sizes) {
    ConvergenceRecord rec;
    rec.n = s;
    rec.m = s;
    const auto t0 = Clock::now();
    try {
      const auto r = solve_spec(mdl, s, s, EigenOptions{}.tol);
      rec.wall_time_seconds = seconds_since(t0);
      rec.r0 = r.r0;
      rec.residual = r.residual;
      rec.err_r0 = std::abs(r.r0 - rep.reference_r0);
      if (have_phi) {
        const auto [phi, err] =
            match_exact(r.eigvec, mdl.reference.eigenfunction_exact);
        rec.err_phi = err;
      }
    } catch (const std::exception& e) {
      rec.wall_time_seconds = seconds_since(t0);
      rec.failed = true;
      rec.error = e.what();
    }
    rep.records.push_back(std::move(rec));
  }

  rep.order_r0 = estimate_order(rep.records, ErrorKind::R0);
  if (have_phi)
    rep.order_phi = estimate_order(rep.records, ErrorKind::Eigenfunction);
  return rep;
}

std::optional<double> estimate_order(
    const std::vector<ConvergenceRecord>& records, ErrorKind kind) {
  std::vector<std::pair<double, double>> pts;  // (log10 n, log10 err)
  for (const auto& r : records) {
    if (r.failed) continue;
    const auto& err = kind == ErrorKind::R0 ? r.err_r0 : r.err_phi;
    if (!err) continue;
    // Roundoff plateau: fitting through it would flatten the slope.
    if (!(*err > 1e-12) || !(*err > 10.0 * r.residual)) continue;
    pts.emplace_back(std::log10(double(r.n)), std::log10(*err));
  }
  if (pts.size() < 3) return std::nullopt;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = double(pts.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return -slope;
}

void emit_csv(const ConvergenceReport& report, std::ostream& out) {
  out << "n,m,r0,err_r0,err_phi,residual,wall_time_s\n";
  for (const auto& r : report.records) {
    out << r.n << ',' << r.m << ',';
    if (!r.failed) {
      out << shortest(r.r0) << ',';
      out << (r.err_r0 ? shortest(*r.err_r0) : "") << ',';
      out << (r.err_phi ? shortest(*r.err_phi) : "") << ',';
      out << shortest(r.residual) << ',';
    } else {
      out << ",,,,";
    }
    out << shortest(r.wall_time_seconds) << '\n';
  }
}

void emit_csv(const ConvergenceReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_csv: cannot open '" + path + "'");
  emit_csv(report, out);
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write failed for '" + path + "'");
}

}  // namespace r0colloc
