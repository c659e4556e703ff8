"""Exact coupling coefficients for the most-degenerate representations of SO(n).

The package computes the tetrahedral group integral over three copies of
SO(n), the squares of the class-one 3j-symbols, the derived 6j-symbols,
representation dimensions and the full topology weights, either symbolically
as canonical rational functions of n or exactly at a fixed integer n >= 2.
Independent verification oracles live in :mod:`sonj.oracle`.
"""

from .rational import RATIONAL_BACKEND, Rat, as_rat, sqrt_exact
from .kernel import KERNEL_BACKEND
from .poly import (
    PoleError,
    PolyN,
    RatFuncN,
    ZeroDenominatorError,
    factor_for_display,
    format_factored,
    pochhammer_poly,
    poly_gcd,
    ratfunc_eval,
    ratfunc_normalize,
)
from .gammaalg import GammaKey, GammaProduct, GammaResidueError, gp_reduce
from .gegenbauer import (
    PiRational,
    addition_coeff_a,
    gegenbauer_coeffs,
    reduction_coeff_b,
    triple_product_integral_exact,
    weight_integral,
)
from .coupling import (
    CouplingLabels,
    SqrtRational,
    Triad,
    UndefinedBySelectionRules,
    c_alpha,
    canonical_representative,
    dim,
    g_reduced,
    i_alpha,
    selection_ok,
    sixj,
    sixj_squared,
    symmetry_orbit,
    threej_squared,
)
from .reference import reference_table

__version__ = "1.0.0"

__all__ = [
    "RATIONAL_BACKEND",
    "KERNEL_BACKEND",
    "Rat",
    "as_rat",
    "sqrt_exact",
    "PolyN",
    "RatFuncN",
    "PoleError",
    "ZeroDenominatorError",
    "poly_gcd",
    "pochhammer_poly",
    "ratfunc_normalize",
    "ratfunc_eval",
    "factor_for_display",
    "format_factored",
    "GammaKey",
    "GammaProduct",
    "GammaResidueError",
    "gp_reduce",
    "PiRational",
    "gegenbauer_coeffs",
    "addition_coeff_a",
    "reduction_coeff_b",
    "weight_integral",
    "triple_product_integral_exact",
    "Triad",
    "CouplingLabels",
    "SqrtRational",
    "UndefinedBySelectionRules",
    "dim",
    "selection_ok",
    "threej_squared",
    "g_reduced",
    "i_alpha",
    "sixj",
    "sixj_squared",
    "c_alpha",
    "symmetry_orbit",
    "canonical_representative",
    "reference_table",
    "__version__",
]
