"""
Conformal package: conforme transformaties van de bal en de bijbehorende variationele controles
"""
from modules.conformal.ball_maps import (
    BallConformalMap,
    ConformalFlow,
    apply_map,
    compose,
    conformality_residual,
    flow_map,
    inverse,
    magnification,
    magnification_from_exterior,
    mobius_add,
    random_ball_map,
    random_rotation,
    random_unit_vector,
)
from modules.conformal.variations import (
    VerificationRecord,
    first_variation_identities,
    image_boundary_length,
    index_form_normal_direction,
    length_deficit_profile,
    normal_square_integral,
    random_flow_suite,
    second_derivative_boundary_length,
    second_variation_formula,
    spherical_conformal_length,
)
from modules.minsurf.catalog import SphereCurve, great_circle, latitude_circle

__all__ = [
    "BallConformalMap",
    "ConformalFlow",
    "SphereCurve",
    "VerificationRecord",
    "apply_map",
    "compose",
    "conformality_residual",
    "first_variation_identities",
    "flow_map",
    "great_circle",
    "image_boundary_length",
    "index_form_normal_direction",
    "inverse",
    "latitude_circle",
    "length_deficit_profile",
    "magnification",
    "magnification_from_exterior",
    "mobius_add",
    "normal_square_integral",
    "random_ball_map",
    "random_flow_suite",
    "random_rotation",
    "random_unit_vector",
    "second_derivative_boundary_length",
    "second_variation_formula",
    "spherical_conformal_length",
]
