"""
Divergence Package
"""

from .divergence import (
    DivergenceValue,
    cosine_residual,
    divergence_Dp,
    duality_symmetry_residual,
    first_argument_convexity_gap,
    scalar_bounds,
)
from .alpha_divergence import (
    alpha_divergence,
    classical_alpha_divergence,
    hellinger_S0,
    pythagorean_residual,
    sphere_divergence,
    symmetry_residual,
)
from .estimates import (
    continuity_estimate,
    divergence_neighbourhoods,
    joint_convexity_gap,
    on_sphere,
    scaling_inequality_gap,
    sphere_convexity_gap,
    sphere_point,
)

__all__ = [
    "DivergenceValue",
    "cosine_residual",
    "divergence_Dp",
    "duality_symmetry_residual",
    "first_argument_convexity_gap",
    "scalar_bounds",
    "alpha_divergence",
    "classical_alpha_divergence",
    "hellinger_S0",
    "pythagorean_residual",
    "sphere_divergence",
    "symmetry_residual",
    "continuity_estimate",
    "divergence_neighbourhoods",
    "joint_convexity_gap",
    "on_sphere",
    "scaling_inequality_gap",
    "sphere_convexity_gap",
    "sphere_point",
]
