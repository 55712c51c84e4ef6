"""
L_p Package
"""

from .lp_space import (
    HolderProduct,
    LpVector,
    bilinear_form,
    conjugate_by,
    conjugate_order,
    holder_product,
    left_multiply,
    pairing,
    schatten_norm,
)
from .embedding import (
    DualityReport,
    alpha_embed,
    alpha_to_order,
    alpha_unembed,
    duality_identity_residual,
    duality_map,
    duality_report,
    normalized_duality_map,
    norming_functional,
    order_to_alpha,
)
from .potential import (
    fenchel_young_gap,
    finite_difference_derivative,
    legendre_residual,
    potential,
    potential_directional_derivative,
)
from .connections import alpha_geodesic, dual_transport, parallel_transport

__all__ = [
    "HolderProduct",
    "LpVector",
    "bilinear_form",
    "conjugate_by",
    "conjugate_order",
    "holder_product",
    "left_multiply",
    "pairing",
    "schatten_norm",
    "DualityReport",
    "alpha_embed",
    "alpha_to_order",
    "alpha_unembed",
    "duality_identity_residual",
    "duality_map",
    "duality_report",
    "normalized_duality_map",
    "norming_functional",
    "order_to_alpha",
    "fenchel_young_gap",
    "finite_difference_derivative",
    "legendre_residual",
    "potential",
    "potential_directional_derivative",
    "alpha_geodesic",
    "dual_transport",
    "parallel_transport",
]
