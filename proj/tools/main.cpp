// Command-line front end: single-model solves, convergence sweeps, model
// listing, and DFE surface export. Data goes to stdout (or --out);
// diagnostics go to stderr. Exit codes: 0 success, 2 argument errors,
// 3 model or validation errors, 4 numerical failures.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "r0colloc/age_immunity.hpp"
#include "r0colloc/errors.hpp"
#include "r0colloc/harness.hpp"
#include "r0colloc/model.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kArgError = 2;
constexpr int kModelError = 3;
constexpr int kNumericError = 4;

// Shortest decimal that round-trips; locale-independent by construction.
std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Parses "start:stop:step" into the size list {start, start+step, ..., <=stop}.
std::vector<int> parse_sizes(const std::string& text) {
  int a = 0, b = 0, s = 0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(text);
  if (!(in >> a >> sep1 >> b >> sep2 >> s) || sep1 != ':' || sep2 != ':' ||
      !in.eof())
    throw std::runtime_error("--sizes expects start:stop:step, got '" + text +
                             "'");
  if (a < 2 || b < a || s < 1)
    throw std::runtime_error(
        "--sizes needs start >= 2, stop >= start, step >= 1");
  std::vector<int> sizes;
  for (int v = a; v <= b; v += s) sizes.push_back(v);
  return sizes;
}

// Parses "RxC" with both dimensions at least 2.
std::pair<int, int> parse_grid(const std::string& text) {
  int r = 0, c = 0;
  char sep = 0;
  std::istringstream in(text);
  if (!(in >> r >> sep >> c) || sep != 'x' || !in.eof())
    throw std::runtime_error("--grid expects RxC, got '" + text + "'");
  if (r < 2 || c < 2)
    throw std::runtime_error("--grid needs at least 2 points per axis");
  return {r, c};
}

// Opens --out when given, else uses stdout. Returns null on open failure.
std::ostream* open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return &std::cout;
  file.open(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return nullptr;
  }
  return &file;
}

int run_compute(const std::string& model, int n, int m, double tol,
                const std::string& format) {
  const auto r = r0colloc::solve_builtin(model, n, m, tol);
  if (!r.converged) {
    std::cerr << "error: eigensolver did not converge (residual "
              << fmt(r.residual) << " after " << r.iterations
              << " iterations)\n";
    return kNumericError;
  }
  if (format == "csv") {
    std::cout << "r0,residual,iterations,n,m,model\n"
              << fmt(r.r0) << ',' << fmt(r.residual) << ',' << r.iterations
              << ',' << n << ',' << m << ',' << model << '\n';
  } else {
    nlohmann::ordered_json j;
    j["r0"] = r.r0;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["n"] = n;
    j["m"] = m;
    j["model"] = model;
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

int run_converge(const std::string& model, const std::string& sizes_text,
                 const std::string& out) {
  const auto sizes = parse_sizes(sizes_text);  // throws runtime_error -> 2
  const auto rep = r0colloc::run_convergence(model, sizes);
  std::cerr << "reference r0 = " << fmt(rep.reference_r0) << " ("
            << rep.reference_note << ")\n";
  if (rep.order_r0)
    std::cerr << "fitted order_r0 = " << fmt(*rep.order_r0) << '\n';
  if (rep.order_phi)
    std::cerr << "fitted order_phi = " << fmt(*rep.order_phi) << '\n';
  for (const auto& r : rep.records)
    if (r.failed)
      std::cerr << "size " << r.n << " failed: " << r.error << '\n';
  if (out.empty())
    r0colloc::emit_csv(rep, std::cout);
  else
    r0colloc::emit_csv(rep, out);  // runtime_error on I/O failure -> 2
  return kOk;
}

int run_list() {
  for (const auto& name : r0colloc::builtin_names()) {
    const auto m = r0colloc::builtin(name);
    std::cout << name << ": r0 = " << fmt(*m.reference.r0_exact) << " ("
              << m.reference.r0_reference_note << "); " << m.description
              << '\n';
  }
  return kOk;
}

int run_dfe(const std::string& model, const std::string& grid_text,
            const std::string& out) {
  const auto [rows, cols] = parse_grid(grid_text);  // runtime_error -> 2
  const auto b = r0colloc::age_immunity_builtin(model);
  std::ofstream file;
  std::ostream* os = open_sink(out, file);
  if (!os) return kArgError;

  *os << "a,w,s_bar\n";
  for (int i = 0; i < rows; ++i) {
    const double a = b.spec.a_max * double(i) / double(rows - 1);
    for (int j = 0; j < cols; ++j) {
      const double w = double(j) / double(cols - 1);
      *os << fmt(a) << ',' << fmt(w) << ',' << fmt(b.dfe.s_bar(a, w)) << '\n';
    }
  }
  os->flush();
  if (!*os) {
    std::cerr << "error: write failed for '" << out << "'\n";
    return kArgError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Basic reproduction number of epidemic models with two continuous "
      "structuring variables, by pseudospectral collocation"};
  app.require_subcommand(1);

  std::string model, format = "json", sizes = "4:40:4", out;
  std::string grid = "101x101";
  int n = 0, m = 0;
  double tol = 1e-13;

  auto* compute =
      app.add_subcommand("compute", "Solve one model at a fixed grid size");
  compute->add_option("--model", model, "built-in model name")->required();
  compute->add_option("--n", n, "polynomial degree in x")
      ->required()
      ->check(CLI::Range(1, 100000));
  compute->add_option("--m", m, "polynomial degree in y")
      ->required()
      ->check(CLI::Range(1, 100000));
  compute->add_option("--tol", tol, "eigensolver tolerance")
      ->check(CLI::PositiveNumber);
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* converge = app.add_subcommand(
      "converge", "Run a convergence sweep and emit its CSV table");
  converge->add_option("--model", model, "built-in model name")->required();
  converge->add_option("--sizes", sizes, "sweep sizes as start:stop:step");
  converge->add_option("--out", out, "CSV destination (default stdout)");

  app.add_subcommand("list-models",
                     "List built-in models with reference values");

  auto* dfe = app.add_subcommand(
      "dfe", "Export a disease-free equilibrium surface as CSV");
  dfe->add_option("--model", model, "age-immunity model name")->required();
  dfe->add_option("--grid", grid, "evaluation grid as RxC");
  dfe->add_option("--out", out, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or error text
    return code == 0 ? kOk : kArgError;
  }

  try {
    if (compute->parsed()) return run_compute(model, n, m, tol, format);
    if (converge->parsed()) return run_converge(model, sizes, out);
    if (dfe->parsed()) return run_dfe(model, grid, out);
    return run_list();
  } catch (const r0colloc::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kModelError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgError;
  }
}
