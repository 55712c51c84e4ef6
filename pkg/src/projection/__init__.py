"""
Projection Package
"""

from .convex_sets import AffineSlice, ConeHull, ConvexSetSpec, NormBall, project_onto_lp_ball
from .certificates import (
    optimality_residuals,
    sublevel_boundary_time,
    sublevel_exit_time,
    sublevel_membership,
)
from .solver import ProjectionResult, ProjectionSolver, SolverOptions, project_Dp
from .alpha_projection import (
    AlphaProjection,
    alpha_project,
    normal_cone_curve_residual,
    projection_continuity_profile,
    projection_norm_bound,
)
from .sphere import sphere_duality_modulus, tangent_project

__all__ = [
    "AffineSlice",
    "ConeHull",
    "ConvexSetSpec",
    "NormBall",
    "project_onto_lp_ball",
    "optimality_residuals",
    "sublevel_boundary_time",
    "sublevel_exit_time",
    "sublevel_membership",
    "ProjectionResult",
    "ProjectionSolver",
    "SolverOptions",
    "project_Dp",
    "AlphaProjection",
    "alpha_project",
    "normal_cone_curve_residual",
    "projection_continuity_profile",
    "projection_norm_bound",
    "sphere_duality_modulus",
    "tangent_project",
]
