"""Smoke tests for the Python bindings: every exported operation runs and
returns sensible values on small problems."""

import math

import numpy as np
import pytest

import r0colloc as rc


def test_list_models():
    names = rc.list_models()
    assert names == ["ex1", "ex2", "ex3", "ageimm-ex6", "ageimm-ex7"]


def test_model_info():
    info = rc.model_info("ex2")
    assert info["name"] == "ex2"
    assert info["domain"] == (0.0, 1.0, 0.0, 1.0)
    assert info["reference_r0"] == pytest.approx(6.0 / 77.0, abs=1e-15)
    assert not info["self_converged_reference"]
    assert info["has_exact_eigenfunction"]

    info7 = rc.model_info("ageimm-ex7")
    assert info7["self_converged_reference"]
    assert not info7["has_exact_eigenfunction"]

    with pytest.raises(ValueError):
        rc.model_info("nope")


def test_compute_r0():
    out = rc.compute_r0("ex1", 12, 12)
    assert out["converged"]
    assert out["r0"] == pytest.approx(0.273066981413697, abs=1e-11)
    assert out["residual"] <= 1e-10
    assert out["model"] == "ex1"
    assert (out["n"], out["m"]) == (12, 12)


def test_eigenpair_matches_closed_form():
    r0, x, y, phi = rc.eigenpair("ex1", 12, 12)
    assert r0 == pytest.approx(0.273066981413697, abs=1e-11)
    assert x.shape == (13,) and y.shape == (13,) and phi.shape == (13, 13)
    assert phi.max() == 1.0
    exact = np.exp(x)[:, None] * np.sin(y)[None, :]
    exact *= phi[6, 6] / exact[6, 6]
    assert np.max(np.abs(phi - exact)) <= 1e-10


def test_convergence_report():
    rep = rc.convergence("ex2", [8, 12, 16, 20, 24])
    assert rep["model"] == "ex2"
    assert rep["reference_r0"] == pytest.approx(6.0 / 77.0, abs=1e-15)
    assert 4.0 < rep["order_r0"] < 10.0
    assert 3.0 < rep["order_phi"] < 8.0
    ns = [r["n"] for r in rep["records"]]
    assert ns == sorted(ns)
    for r in rep["records"]:
        assert not r["failed"]
        assert r["err_r0"] >= 0.0
        assert r["residual"] <= 1e-10


def test_convergence_csv():
    text = rc.convergence_csv("ex1", [4, 6])
    lines = text.strip().splitlines()
    assert lines[0] == "n,m,r0,err_r0,err_phi,residual,wall_time_s"
    assert len(lines) == 3
    assert all(len(line.split(",")) == 7 for line in lines)


def test_oracle_r0_against_closed_form():
    exact = (1.0 - 2.0 * math.exp(-4.0) + math.exp(-8.0)) / 40.0
    assert rc.oracle_r0("ageimm-ex6") == pytest.approx(exact, abs=1e-9)
    with pytest.raises(ValueError):
        rc.oracle_r0("ex1")


def test_dfe_surface_values():
    a, w, s = rc.dfe_surface("ageimm-ex6", rows=5, cols=5)
    assert a[0] == 0.0 and a[-1] == 2.0
    assert w[0] == 0.0 and w[-1] == 1.0
    # Closed form for this model: (1 - w)^2 e^{-4a}.
    expected = (1.0 - w)[None, :] ** 2 * np.exp(-4.0 * a)[:, None]
    assert np.max(np.abs(s - expected)) <= 1e-12


def test_spectral_building_blocks():
    nodes = rc.cheb_nodes(8, -1.0, 1.0)
    assert nodes[0] == -1.0 and nodes[-1] == 1.0
    assert np.all(np.diff(nodes) > 0)

    weights = rc.cc_weights(8, -1.0, 1.0)
    assert weights.sum() == pytest.approx(2.0, abs=1e-14)
    # Exact for degree <= 8 polynomials: integral of x^4 over [-1, 1].
    assert weights @ nodes**4 == pytest.approx(0.4, abs=1e-14)

    d = rc.diff_matrix(nodes)
    assert np.max(np.abs(d @ nodes**3 - 3.0 * nodes**2)) <= 1e-12

    bary = rc.bary_weights(nodes)
    assert np.max(np.abs(bary)) == 1.0

    xs = np.linspace(-1.0, 1.0, 11)
    vals = rc.interp1(nodes, nodes**5, xs)
    assert np.max(np.abs(vals - xs**5)) <= 1e-13


def test_numerical_error_is_exposed():
    assert issubclass(rc.NumericalError, RuntimeError)
