"""Equivariant selfmaps of cohomogeneity-one manifolds.

Polynomial selfmaps psi_k of SU(3), k-power maps of spheres and geodesic
folding maps of CP^m, together with two independent verification engines
for their degrees and Lefschetz numbers: Monte-Carlo integration of
signed Jacobians and exact combinatorial enumeration.
"""

from ._core import (
    CohomOneData,
    RandomSource,
    allowed_fold_params,
    apply_realization,
    catalog,
    catalog_entry,
    chebyshev_eval,
    cofactor_conjugate,
    compare_degree,
    cpm_fold,
    degree_formula,
    degree_oracle,
    estimate_degree,
    eval_f,
    eval_g,
    eval_h,
    haar_special_orthogonal,
    haar_special_unitary,
    halfangle_coefficients,
    homology_sphere_chi,
    lefschetz_formula,
    lefschetz_oracle,
    normal_geodesic,
    orbit_invariant_x,
    power_map,
    product_spheres_chi,
    projective_residual,
    psi,
    realizable_su3_degree,
    realize_degree,
    recover_slice_parameter,
    ring_degree_lefschetz,
    run_verify_suite,
    signed_jacobian,
    sphere_power,
    uniform_cpm_point,
    uniform_sphere_point,
)

__version__ = "0.1.0"

__all__ = [
    "CohomOneData",
    "RandomSource",
    "allowed_fold_params",
    "apply_realization",
    "catalog",
    "catalog_entry",
    "chebyshev_eval",
    "cofactor_conjugate",
    "compare_degree",
    "cpm_fold",
    "degree_formula",
    "degree_oracle",
    "estimate_degree",
    "eval_f",
    "eval_g",
    "eval_h",
    "haar_special_orthogonal",
    "haar_special_unitary",
    "halfangle_coefficients",
    "homology_sphere_chi",
    "lefschetz_formula",
    "lefschetz_oracle",
    "normal_geodesic",
    "orbit_invariant_x",
    "power_map",
    "product_spheres_chi",
    "projective_residual",
    "psi",
    "realizable_su3_degree",
    "realize_degree",
    "recover_slice_parameter",
    "ring_degree_lefschetz",
    "run_verify_suite",
    "signed_jacobian",
    "sphere_power",
    "uniform_cpm_point",
    "uniform_sphere_point",
]
