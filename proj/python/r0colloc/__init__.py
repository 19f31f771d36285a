"""Basic reproduction number of two-trait structured epidemic models.

Thin Python face of the C++ collocation core: model registry access,
single solves, convergence sweeps, the quadrature reference value for the
age-immunity models, and the 1-D spectral building blocks.
"""

from r0colloc._core import (
    NumericalError,
    bary_weights,
    cc_weights,
    cheb_nodes,
    compute_r0,
    convergence,
    convergence_csv,
    dfe_surface,
    diff_matrix,
    eigenpair,
    interp1,
    list_models,
    model_info,
    oracle_r0,
)

__all__ = [
    "NumericalError",
    "bary_weights",
    "cc_weights",
    "cheb_nodes",
    "compute_r0",
    "convergence",
    "convergence_csv",
    "dfe_surface",
    "diff_matrix",
    "eigenpair",
    "interp1",
    "list_models",
    "model_info",
    "oracle_r0",
]

__version__ = "0.1.0"
