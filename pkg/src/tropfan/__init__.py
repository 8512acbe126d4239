"""Exact max-plus algebra on 1-dimensional tropical fans.

Models fans and their Boolean function semirings, decides equality of
max-of-linear-forms functions on R^n and on ray unions, enumerates every
semiring homomorphism between Laurent-generated subsemirings as finite
matrix families (hence every morphism between 1-dimensional tropical fans),
and constructs separating-witness polynomial pairs.
"""

from .maxplus import LabelMismatchError, NotAUnitError, TropVector, ext_add, ext_max, zero_unit
from .tropoly import (PolySyntaxError, TropPoly, fn_eq_on_rays, fn_eq_on_space,
                      parse_poly, separating_point, substitute_units)
from .fan import (Fan1D, GenMatrix, Ray, apply_phi_to_poly, check_balancing,
                  fan_from_generators, kernel_eq, primitive, weighted_eval_map)
from .lattice import (Lattice, LatticeSolveError, LatticeSpanError, hnf,
                      scalar_modulus, solve_int, xgcd)
from .cones import extreme_rays
from .homsearch import (ConeRecord, Hom, HomEnumeration, HomFamily,
                        MorphismEnumeration, MorphismFamily, NotGeometricError,
                        apply_functor, enumerate_homs, enumerate_morphisms,
                        geometric_check, hom_from_images, recover_T)
from .witness import (PointInSupportError, WitnessPair, in_congruence_variety,
                      integerize, orth_basis, separating_pair, verify_witness)

__version__ = "0.1.0"

__all__ = [
    "TropVector", "zero_unit", "ext_max", "ext_add",
    "LabelMismatchError", "NotAUnitError",
    "TropPoly", "parse_poly", "PolySyntaxError",
    "fn_eq_on_space", "fn_eq_on_rays", "separating_point", "substitute_units",
    "Ray", "Fan1D", "GenMatrix", "primitive", "check_balancing",
    "weighted_eval_map", "apply_phi_to_poly", "fan_from_generators", "kernel_eq",
    "hnf", "xgcd", "Lattice", "solve_int", "scalar_modulus",
    "LatticeSolveError", "LatticeSpanError",
    "extreme_rays",
    "geometric_check", "enumerate_homs", "HomFamily", "ConeRecord",
    "HomEnumeration", "Hom", "hom_from_images", "NotGeometricError",
    "recover_T", "apply_functor", "enumerate_morphisms",
    "MorphismFamily", "MorphismEnumeration",
    "orth_basis", "separating_pair", "verify_witness", "in_congruence_variety",
    "WitnessPair", "PointInSupportError", "integerize",
]
