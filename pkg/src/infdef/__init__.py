"""Exact computations for infinitesimal deformations.

Submodules: ``poly`` (polynomials), ``groebner`` (Gröbner bases and normal
forms), ``artin`` (finite local algebras), ``hyperdef`` (hypersurface
deformations), ``projcoh`` (cohomology on projective space) and ``cli``.
"""

from .artin import (
    AlgebraMorphism,
    FiniteKAlgebra,
    algebra_from_quotient,
    factor_small_extension,
    fibered_product,
)
from .field import GF, QQ
from .groebner import NormalFormReducer, buchberger, normal_form, quotient_basis
from .hyperdef import (
    DeformationOverA,
    MiniversalFamily,
    TjurinaAlgebra,
    TjurinaData,
    glue_deformations,
    ks_class,
    lift_deformation,
    miniversal_family,
    mu_generators,
    specialize_family,
    tjurina,
)
from .poly import Polynomial, jacobian, mul, parse_poly
from .projcoh import (
    chi_normal_p3,
    coh_dim,
    curve_moduli_dim,
    delta_surjective,
    hypersurface_report,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraMorphism",
    "DeformationOverA",
    "FiniteKAlgebra",
    "GF",
    "MiniversalFamily",
    "NormalFormReducer",
    "Polynomial",
    "QQ",
    "TjurinaAlgebra",
    "TjurinaData",
    "algebra_from_quotient",
    "buchberger",
    "chi_normal_p3",
    "coh_dim",
    "curve_moduli_dim",
    "delta_surjective",
    "factor_small_extension",
    "fibered_product",
    "glue_deformations",
    "hypersurface_report",
    "jacobian",
    "ks_class",
    "lift_deformation",
    "miniversal_family",
    "mu_generators",
    "mul",
    "normal_form",
    "parse_poly",
    "quotient_basis",
    "specialize_family",
    "tjurina",
]
