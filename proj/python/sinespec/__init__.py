"""Spectral sine-basis solvers for PDEs on unbounded domains.

The heavy numerics live in the C++ extension module ``sinespec._core``;
this package re-exports its public surface.
"""

from sinespec._core import (  # noqa: F401
    MetricTerms,
    GalerkinMatrix1D,
    OverlapMatrix,
    QuadratureRule,
    SolveReport,
    Symmetry,
    assemble_general_1d,
    assemble_helmholtz_1d,
    assemble_poisson_1d,
    build_overlap_matrix,
    build_quadrature,
    eval_expansion_physical,
    hartree_energy,
    kronecker_apply,
    metric_terms,
    moments_to_coefficients,
    parity_restrict,
    project_1d,
    project_1d_physical,
    project_3d_separable,
    run_convergence_1d,
    run_table_3d,
    solve_1d,
    solve_3d,
    to_computational,
    to_physical,
)

__all__ = [
    "MetricTerms",
    "GalerkinMatrix1D",
    "OverlapMatrix",
    "QuadratureRule",
    "SolveReport",
    "Symmetry",
    "assemble_general_1d",
    "assemble_helmholtz_1d",
    "assemble_poisson_1d",
    "build_overlap_matrix",
    "build_quadrature",
    "eval_expansion_physical",
    "hartree_energy",
    "kronecker_apply",
    "metric_terms",
    "moments_to_coefficients",
    "parity_restrict",
    "project_1d",
    "project_1d_physical",
    "project_3d_separable",
    "run_convergence_1d",
    "run_table_3d",
    "solve_1d",
    "solve_3d",
    "to_computational",
    "to_physical",
]
