"""Exact equivariant localization on quasiflag spaces.

The package computes, in exact rational arithmetic, the fixed-point data of
the moduli of framed quasiflags on the projective line (tableaux, tangent
weights, pair-bundle characters), the generating series of equivariant
Chern-polynomial integrals and equivariant volumes obtained from them by
localization, and -- independently -- Calogero-Sutherland and Toda
eigenfunction series by coefficient recursion.  The verification layer checks
that the two computations agree coefficient by coefficient, together with the
supporting character, Hall-algebra and matrix identities.
"""

from .characters import (Character, TorusWeight, geom_block, pair_character,
                         shift_defect, tangent_weights)
from .eigenfunctions import (EigenSeries, apply_cs_operator, cs_coefficients,
                             cs_product_series, toda_coefficients,
                             toda_limit_ratios)
from .errors import InternalInconsistency, NonGenericParameter, ResonantParameter
from .hall import (QuiverRepClass, check_product_identity, class_matrix,
                   conjugator_check, conjugator_matrix, hall_count,
                   indecomposable_matrix, unipotent_product)
from .localization import (ParameterPoint, chern_matrix_element, chern_ratio,
                           chern_series_coefficient, evaluate_weight,
                           volume_coefficient)
from .matrices import Matrix
from .roots import (embed_degree, inner, kostant_count, pairing,
                    positive_root_pairs_descending, positive_roots, rho,
                    rho_vee, simple_root)
from .scalars import format_rational, generalized_binomial, parse_rational
from .series import (Series, degree_vectors, denominator_power_series,
                     series_mul, total_degree)
from .tableaux import Tableau, cartan_eigenvalue, enumerate_fixed_points
from .verify import run_properties, verify_main, verify_toda

__version__ = "0.1.0"

__all__ = [
    "Character", "EigenSeries", "InternalInconsistency", "Matrix",
    "NonGenericParameter", "ParameterPoint", "QuiverRepClass",
    "ResonantParameter", "Series", "Tableau", "TorusWeight",
    "apply_cs_operator", "cartan_eigenvalue", "chern_matrix_element",
    "chern_ratio", "chern_series_coefficient", "check_product_identity",
    "class_matrix", "conjugator_check", "conjugator_matrix", "cs_coefficients",
    "cs_product_series", "degree_vectors", "denominator_power_series",
    "embed_degree", "enumerate_fixed_points", "evaluate_weight",
    "format_rational", "generalized_binomial", "geom_block", "hall_count",
    "indecomposable_matrix", "inner", "kostant_count", "pair_character",
    "pairing", "parse_rational", "positive_root_pairs_descending",
    "positive_roots", "rho", "rho_vee", "run_properties", "series_mul",
    "shift_defect", "simple_root", "tangent_weights", "toda_coefficients",
    "toda_limit_ratios", "total_degree", "unipotent_product", "verify_main",
    "verify_toda", "volume_coefficient",
]
