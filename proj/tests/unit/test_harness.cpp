#include "r0colloc/harness.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

using r0colloc::ConvergenceRecord;
using r0colloc::ConvergenceReport;
using r0colloc::emit_csv;
using r0colloc::ErrorKind;
using r0colloc::estimate_order;
using r0colloc::run_convergence;

namespace {

std::vector<ConvergenceRecord> power_law(const std::vector<int>& sizes,
                                         double amp, double order,
                                         double residual = 1e-16) {
  std::vector<ConvergenceRecord> recs;
  for (int n : sizes) {
    ConvergenceRecord r;
    r.n = r.m = n;
    r.r0 = 1.0;
    r.err_r0 = amp * std::pow(double(n), -order);
    r.residual = residual;
    recs.push_back(r);
  }
  return recs;
}

std::string csv_text(const ConvergenceReport& rep) {
  std::ostringstream s;
  emit_csv(rep, s);
  return s.str();
}

}  // namespace

TEST_CASE("estimate_order: exact power law") {
  const auto recs = power_law({4, 8, 16, 32, 64}, 7.0, 5.0);
  const auto order = estimate_order(recs);
  REQUIRE(order.has_value());
  CHECK(std::abs(*order - 5.0) <= 1e-10);
}

TEST_CASE("estimate_order: noisy power law") {
  auto recs = power_law({4, 8, 16, 32, 64}, 7.0, 5.0);
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> unif(-0.01, 0.01);
  for (auto& r : recs) *r.err_r0 *= 1.0 + unif(rng);
  const auto order = estimate_order(recs);
  REQUIRE(order.has_value());
  CHECK(std::abs(*order - 5.0) <= 0.2);
}

TEST_CASE("estimate_order: plateau and residual floors") {
  // All errors at machine plateau: nothing usable.
  auto recs = power_law({4, 8, 16}, 1.0, 5.0);
  for (auto& r : recs) r.err_r0 = 5e-13;
  CHECK(!estimate_order(recs).has_value());

  // Errors above 1e-12 but drowned by the eigen residual: still unusable.
  recs = power_law({4, 8, 16}, 1.0, 5.0, /*residual=*/1e-6);
  for (auto& r : recs) r.err_r0 = 1e-8;
  CHECK(!estimate_order(recs).has_value());

  // Two usable points are not enough for a fit.
  recs = power_law({4, 8}, 7.0, 5.0);
  CHECK(!estimate_order(recs).has_value());

  // Failed records are skipped even with plausible error values.
  recs = power_law({4, 8, 16, 32}, 7.0, 5.0);
  recs[1].failed = true;
  recs[3].failed = true;
  CHECK(!estimate_order(recs).has_value());
}

TEST_CASE("estimate_order: reads the requested error column") {
  auto recs = power_law({4, 8, 16, 32}, 7.0, 5.0);
  for (auto& r : recs)
    r.err_phi = 3.0 * std::pow(double(r.n), -2.0);
  const auto o_phi = estimate_order(recs, ErrorKind::Eigenfunction);
  REQUIRE(o_phi.has_value());
  CHECK(std::abs(*o_phi - 2.0) <= 1e-10);
  CHECK(std::abs(*estimate_order(recs, ErrorKind::R0) - 5.0) <= 1e-10);
}

TEST_CASE("emit_csv: header, fields, and optional columns") {
  ConvergenceReport rep;
  rep.model = "ex1";
  CHECK(csv_text(rep) == "n,m,r0,err_r0,err_phi,residual,wall_time_s\n");

  ConvergenceRecord r;
  r.n = 4;
  r.m = 4;
  r.r0 = 0.25;
  r.err_r0 = 0.5;
  r.residual = 1e-16;
  r.wall_time_seconds = 0.5;
  rep.records.push_back(r);
  CHECK(csv_text(rep) ==
        "n,m,r0,err_r0,err_phi,residual,wall_time_s\n"
        "4,4,0.25,0.5,,1e-16,0.5\n");

  // err_phi present; failed size keeps only n, m, wall time.
  rep.records[0].err_phi = 0.125;
  ConvergenceRecord bad;
  bad.n = 8;
  bad.m = 8;
  bad.failed = true;
  bad.error = "synthetic failure";
  bad.wall_time_seconds = 0.25;
  rep.records.push_back(bad);
  CHECK(csv_text(rep) ==
        "n,m,r0,err_r0,err_phi,residual,wall_time_s\n"
        "4,4,0.25,0.5,0.125,1e-16,0.5\n"
        "8,8,,,,,0.25\n");
}

TEST_CASE("emit_csv: values survive a parse round-trip") {
  ConvergenceReport rep;
  ConvergenceRecord r;
  r.n = 10;
  r.m = 10;
  r.r0 = 0.273066981413697;
  r.err_r0 = 1.0 / 3.0;
  r.residual = 7.213e-17;
  r.wall_time_seconds = 0.0123456789012345678;
  rep.records.push_back(r);

  std::istringstream in(csv_text(rep));
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);
  std::vector<std::string> fields;
  for (std::size_t pos = 0; pos <= line.size();) {
    const auto comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  REQUIRE(fields.size() == 7);
  CHECK(std::stod(fields[2]) == r.r0);
  CHECK(std::stod(fields[3]) == *r.err_r0);
  CHECK(fields[4].empty());
  CHECK(std::stod(fields[5]) == r.residual);
  CHECK(std::stod(fields[6]) == r.wall_time_seconds);
}

TEST_CASE("emit_csv: file destination and failure path") {
  ConvergenceReport rep;
  rep.model = "ex2";
  const std::string path = "/tmp/r0colloc_test_emit.csv";
  emit_csv(rep, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,m,r0,err_r0,err_phi,residual,wall_time_s");

  CHECK_THROWS_AS(emit_csv(rep, "/nonexistent-dir/out.csv"),
                  std::runtime_error);
}

TEST_CASE("run_convergence: rejects malformed size lists") {
  CHECK_THROWS_AS(run_convergence("ex1", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_convergence("ex1", {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(run_convergence("ex1", {4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(run_convergence("ex1", {8, 4}), std::invalid_argument);
  CHECK_THROWS_AS(run_convergence("nope", {4, 8}), std::invalid_argument);
}

TEST_CASE("run_convergence: spectral benchmark reaches the plateau") {
  const auto rep = run_convergence("ex1", {4, 8, 12, 16});
  CHECK(rep.model == "ex1");
  CHECK(rep.reference_r0 == doctest::Approx(0.273066981413697).epsilon(1e-14));
  CHECK(rep.reference_note.find("closed form") != std::string::npos);
  REQUIRE(rep.records.size() == 4);

  double prev = 1.0;
  for (const auto& r : rep.records) {
    CHECK(!r.failed);
    REQUIRE(r.err_r0.has_value());
    REQUIRE(r.err_phi.has_value());
    CHECK(r.residual <= 1e-10);
    CHECK(r.wall_time_seconds > 0.0);
    // Errors fall until roundoff; allow 10x jitter near the plateau.
    if (prev > 1e-12) CHECK(*r.err_r0 <= 10.0 * prev);
    prev = *r.err_r0;
  }
  CHECK(*rep.records.back().err_r0 <= 1e-12);
  CHECK(*rep.records.back().err_phi <= 1e-11);
}

TEST_CASE("run_convergence: finite-order model yields a fitted order") {
  const auto rep = run_convergence("ex2", {8, 12, 16, 20, 24});
  REQUIRE(rep.order_r0.has_value());
  CHECK(*rep.order_r0 > 4.0);
  CHECK(*rep.order_r0 < 10.0);
  REQUIRE(rep.order_phi.has_value());
  CHECK(*rep.order_phi > 3.0);
  CHECK(*rep.order_phi < 8.0);
}

TEST_CASE("run_convergence: self-converged reference is recomputed") {
  const auto rep = run_convergence("ageimm-ex7", {6, 8, 10},
                                   /*self_reference_size=*/14);
  CHECK(rep.reference_note ==
        "self-converged collocation reference at n=m=14");
  CHECK(std::abs(rep.reference_r0 - 0.111258187908847) < 5e-3);
  for (const auto& r : rep.records) {
    CHECK(!r.failed);
    REQUIRE(r.err_r0.has_value());
    CHECK(!r.err_phi.has_value());  // no exact eigenfunction on file
  }
  // The sweep must not sit beyond its own reference.
  CHECK_THROWS_AS(run_convergence("ageimm-ex7", {6, 8, 14}, 14),
                  std::invalid_argument);
}

TEST_CASE("run_convergence: deterministic data columns") {
  auto a = run_convergence("ex1", {4, 6, 8});
  auto b = run_convergence("ex1", {4, 6, 8});
  // Wall clock is the only column allowed to differ between runs.
  for (auto* rep : {&a, &b})
    for (auto& r : rep->records) r.wall_time_seconds = 0.0;
  CHECK(csv_text(a) == csv_text(b));
  CHECK(csv_text(a) == csv_text(a));  // same report, bitwise stable
}

TEST_CASE("solve_builtin: matches the sweep and validates input") {
  const auto r = r0colloc::solve_builtin("ex1", 10, 10);
  CHECK(r.converged);
  CHECK(std::abs(r.r0 - 0.273066981413697) <= 1e-9);
  CHECK(r.iterations >= 1);
  CHECK(r.eigvec.values.size() == 121);
  CHECK_THROWS_AS(r0colloc::solve_builtin("nope", 4, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(r0colloc::solve_builtin("ex1", 0, 4),
                  std::invalid_argument);
}
