// Python bindings for the collocation core: model registry access, single
// solves, convergence sweeps, the quadrature-based reference value for the
// age-immunity models, and the 1-D spectral building blocks.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "r0colloc/age_immunity.hpp"
#include "r0colloc/errors.hpp"
#include "r0colloc/harness.hpp"
#include "r0colloc/model.hpp"
#include "r0colloc/spectral1d.hpp"

namespace py = pybind11;

namespace {

py::dict record_dict(const r0colloc::ConvergenceRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["m"] = r.m;
  d["failed"] = r.failed;
  if (r.failed) {
    d["error"] = r.error;
    return d;
  }
  d["r0"] = r.r0;
  d["err_r0"] = py::cast(r.err_r0);
  d["err_phi"] = py::cast(r.err_phi);
  d["residual"] = r.residual;
  d["wall_time_s"] = r.wall_time_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Basic reproduction number of epidemic models with two continuous "
      "structuring variables, by pseudospectral collocation";

  py::register_exception<r0colloc::NumericalError>(m, "NumericalError",
                                                   PyExc_RuntimeError);

  m.def("list_models", &r0colloc::builtin_names,
        "Names of the built-in models, in registry order.");

  m.def(
      "model_info",
      [](const std::string& name) {
        const auto b = r0colloc::builtin(name);
        py::dict d;
        d["name"] = b.spec.name;
        d["description"] = b.description;
        d["domain"] = py::make_tuple(b.spec.x_lo, b.spec.x_hi, b.spec.y_lo,
                                     b.spec.y_hi);
        d["reference_r0"] = py::cast(b.reference.r0_exact);
        d["reference_note"] = b.reference.r0_reference_note;
        d["self_converged_reference"] = b.reference.r0_self_converged;
        d["has_exact_eigenfunction"] =
            bool(b.reference.eigenfunction_exact);
        return d;
      },
      py::arg("name"), "Registry metadata for one built-in model.");

  m.def(
      "compute_r0",
      [](const std::string& model, int n, int mm, double tol) {
        const auto r = r0colloc::solve_builtin(model, n, mm, tol);
        py::dict d;
        d["r0"] = r.r0;
        d["residual"] = r.residual;
        d["iterations"] = r.iterations;
        d["converged"] = r.converged;
        d["n"] = n;
        d["m"] = mm;
        d["model"] = model;
        return d;
      },
      py::arg("model"), py::arg("n"), py::arg("m"), py::arg("tol") = 1e-13,
      "Solve one model on an (n, m) grid; returns a result dict.");

  m.def(
      "eigenpair",
      [](const std::string& model, int n, int mm, double tol) {
        const auto r = r0colloc::solve_builtin(model, n, mm, tol);
        return py::make_tuple(r.r0, r.eigvec.grid.gx.nodes,
                              r.eigvec.grid.gy.nodes, r.eigvec.to_matrix());
      },
      py::arg("model"), py::arg("n"), py::arg("m"), py::arg("tol") = 1e-13,
      "Returns (r0, x_nodes, y_nodes, phi) with phi[i, j] = phi(x_i, y_j), "
      "normalized so the largest entry is 1.");

  m.def(
      "convergence",
      [](const std::string& model, const std::vector<int>& sizes,
         int self_reference_size) {
        const auto rep =
            r0colloc::run_convergence(model, sizes, self_reference_size);
        py::dict d;
        d["model"] = rep.model;
        d["reference_r0"] = rep.reference_r0;
        d["reference_note"] = rep.reference_note;
        d["order_r0"] = py::cast(rep.order_r0);
        d["order_phi"] = py::cast(rep.order_phi);
        py::list recs;
        for (const auto& r : rep.records) recs.append(record_dict(r));
        d["records"] = recs;
        return d;
      },
      py::arg("model"), py::arg("sizes"),
      py::arg("self_reference_size") = 100,
      "Run a convergence sweep with n = m = size for each size.");

  m.def(
      "convergence_csv",
      [](const std::string& model, const std::vector<int>& sizes,
         int self_reference_size) {
        std::ostringstream out;
        r0colloc::emit_csv(
            r0colloc::run_convergence(model, sizes, self_reference_size),
            out);
        return out.str();
      },
      py::arg("model"), py::arg("sizes"),
      py::arg("self_reference_size") = 100,
      "Convergence sweep rendered as the canonical CSV table.");

  m.def(
      "oracle_r0",
      [](const std::string& model) {
        const auto b = r0colloc::age_immunity_builtin(model);
        return r0colloc::oracle_r0(b.spec, b.dfe);
      },
      py::arg("model"),
      "Reference value by direct nested quadrature, independent of the "
      "collocation pipeline (age-immunity models only).");

  m.def(
      "dfe_surface",
      [](const std::string& model, int rows, int cols) {
        if (rows < 2 || cols < 2)
          throw std::invalid_argument(
              "dfe_surface: need at least 2 points per axis");
        const auto b = r0colloc::age_immunity_builtin(model);
        Eigen::VectorXd a(rows), w(cols);
        Eigen::MatrixXd s(rows, cols);
        for (int i = 0; i < rows; ++i)
          a[i] = b.spec.a_max * double(i) / double(rows - 1);
        for (int j = 0; j < cols; ++j)
          w[j] = double(j) / double(cols - 1);
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j) s(i, j) = b.dfe.s_bar(a[i], w[j]);
        return py::make_tuple(a, w, s);
      },
      py::arg("model"), py::arg("rows") = 101, py::arg("cols") = 101,
      "Susceptible equilibrium density on a uniform age-immunity lattice; "
      "returns (a, w, s_bar) with s_bar[i, j] = s_bar(a_i, w_j).");

  m.def("cheb_nodes", &r0colloc::cheb_nodes, py::arg("degree"),
        py::arg("lo"), py::arg("hi"),
        "Chebyshev extremal nodes on [lo, hi], ascending.");
  m.def("cc_weights", &r0colloc::cc_weights, py::arg("degree"),
        py::arg("lo"), py::arg("hi"),
        "Clenshaw-Curtis quadrature weights matching cheb_nodes.");
  m.def("diff_matrix", &r0colloc::diff_matrix, py::arg("nodes"),
        "Spectral differentiation matrix for strictly increasing nodes.");
  m.def("bary_weights", &r0colloc::bary_weights, py::arg("nodes"),
        "Barycentric interpolation weights, max-normalized.");
  m.def(
      "interp1",
      [](const Eigen::VectorXd& nodes, const Eigen::VectorXd& values,
         const Eigen::VectorXd& xs) {
        const auto bary = r0colloc::bary_weights(nodes);
        Eigen::VectorXd out(xs.size());
        for (Eigen::Index i = 0; i < xs.size(); ++i)
          out[i] = r0colloc::interp1(nodes, bary, values, xs[i]);
        return out;
      },
      py::arg("nodes"), py::arg("values"), py::arg("xs"),
      "Barycentric evaluation of the interpolant of (nodes, values).");
}
