#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "r0colloc/eigensolver.hpp"
#include "r0colloc/model.hpp"

namespace r0colloc {

/// One size of a convergence sweep. When `failed` is set the value fields
/// are meaningless and `error` carries the diagnostic; the wall time still
/// reflects the attempt.
struct ConvergenceRecord {
  int n = 0;
  int m = 0;
  double r0 = 0.0;
  std::optional<double> err_r0;   ///< |r0 - reference|
  std::optional<double> err_phi;  ///< sup eigenfunction error (match_exact)
  double residual = 0.0;
  double wall_time_seconds = 0.0;
  bool failed = false;
  std::string error;
};

/// Full sweep result. Records are sorted by n. Fitted orders are present
/// only when at least three records sit above the roundoff plateau.
struct ConvergenceReport {
  std::string model;
  std::vector<ConvergenceRecord> records;
  std::optional<double> order_r0;
  std::optional<double> order_phi;
  double reference_r0 = 0.0;
  std::string reference_note;  ///< provenance of reference_r0
};

/// Which error column an order fit reads.
enum class ErrorKind { R0, Eigenfunction };

/// Result of a single assemble-and-solve run of a named built-in model.
struct SolveResult {
  double r0 = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  GridFunction eigvec;
};

/// Validates, assembles and solves a built-in model on an (n, m) grid.
/// Throws std::invalid_argument for unknown names, bad degrees, or
/// validation errors; numerical failures surface as NumericalError.
SolveResult solve_builtin(const std::string& model, int n, int m,
                          double tol = 1e-13);

/// Runs the full pipeline for each size with n = m = size, measuring
/// R0 and eigenfunction errors against the model's reference. Models whose
/// stored reference is itself a collocation output (ageimm-ex7) get a fresh
/// self-reference computed at n = m = self_reference_size first. Per-size
/// failures are recorded in the report without aborting the sweep; sizes
/// must be ascending and each at least 2. Sizes run sequentially.
ConvergenceReport run_convergence(const std::string& model,
                                  const std::vector<int>& sizes,
                                  int self_reference_size = 100);

/// Least-squares slope of log10(error) against log10(n), sign-flipped so a
/// decaying error yields a positive order. Records below the roundoff
/// plateau (error <= 1e-12 or <= 10x the eigen residual) are excluded;
/// fewer than three usable records yields nullopt rather than a fit.
std::optional<double> estimate_order(
    const std::vector<ConvergenceRecord>& records,
    ErrorKind kind = ErrorKind::R0);

/// Writes the report as CSV with header
/// `n,m,r0,err_r0,err_phi,residual,wall_time_s`, one row per size, values
/// in shortest round-trip decimal, optional fields empty when absent.
/// Failed sizes keep n, m and the wall time; value fields stay empty.
/// Byte output is deterministic for identical reports.
void emit_csv(const ConvergenceReport& report, std::ostream& out);

/// As above, writing to a file. I/O failures raise std::runtime_error
/// naming the destination path.
void emit_csv(const ConvergenceReport& report, const std::string& path);

}  // namespace r0colloc
