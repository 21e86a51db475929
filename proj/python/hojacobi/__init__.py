"""Heckman-Opdam Jacobi polynomials of type BC and the hypergroup convolution
on the fundamental alcove."""

from ._core import (
    ClassicalJacobiParams,
    ConvolutionReport,
    EmpiricalMeasure,
    JacobiEngine,
    JacobiPolynomial,
    Multiplicities,
    Rank1Map,
    RankProfile,
    c_function,
    classical_R,
    convolve,
    dominance_leq,
    estimate_kappa,
    koornwinder_product,
    lower_set,
    product_formula_check,
    rank1_param_map,
    weight_w_m,
    weyl_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "ClassicalJacobiParams",
    "ConvolutionReport",
    "EmpiricalMeasure",
    "JacobiEngine",
    "JacobiPolynomial",
    "Multiplicities",
    "Rank1Map",
    "RankProfile",
    "c_function",
    "classical_R",
    "convolve",
    "dominance_leq",
    "estimate_kappa",
    "koornwinder_product",
    "lower_set",
    "product_formula_check",
    "rank1_param_map",
    "weight_w_m",
    "weyl_orbit",
]
