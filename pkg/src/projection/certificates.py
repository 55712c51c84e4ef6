"""
Optimality Certificates
Sampled normal-cone and three-point checks for a candidate D_p-projection,
plus the sublevel sets U_{y,d} = {x : D_p(x, y) <= d}
"""

from typing import Dict

import numpy as np
from scipy import optimize

from src.divergence.divergence import divergence_Dp
from src.lp.embedding import duality_map
from src.lp.lp_space import LpVector, pairing
from src.utils.errors import DomainError, SolverError
from src.utils.sampling import make_rng
from .convex_sets import ConvexSetSpec


def optimality_residuals(
    x_m: LpVector,
    y: LpVector,
    C: ConvexSetSpec,
    samples: int = 200,
    seed: int = 0
) -> Dict[str, float]:
    """
    Worst sampled violation of the projection characterizations

    normal_cone = max_x Re<x - x_m, y~ - x_m~>
    three_point = max_x D(x, x_m) + D(x_m, y) - D(x, y)

    Both are <= 0 (up to tolerance) exactly when x_m is the projection.

    Raises:
        DomainError: x_m is not in C
    """
    if not C.contains(x_m):
        raise DomainError("candidate projection is not a member of the set")
    x_m.check_same_space(y)
    rng = make_rng(seed)
    direction = duality_map(y) - duality_map(x_m)
    d_m = divergence_Dp(x_m, y).value

    normal_cone = -np.inf
    three_point = -np.inf
    for x in C.anchor_points(x_m) + C.sample_points(samples, rng):
        normal_cone = max(normal_cone, pairing(x - x_m, direction).real)
        three_point = max(
            three_point,
            divergence_Dp(x, x_m).value + d_m - divergence_Dp(x, y).value,
        )
    return {"normal_cone": float(normal_cone), "three_point": float(three_point)}


def sublevel_membership(y: LpVector, d: float, x: LpVector) -> bool:
    """x in U_{y,d}"""
    if d < 0:
        raise DomainError("sublevel radius must be non-negative")
    return divergence_Dp(x, y).value <= d


def sublevel_exit_time(y: LpVector, d: float, x: LpVector, h: LpVector, max_doublings: int = 80) -> float:
    """A t > 0 with x + t h outside U_{y,d} (the sets contain no half-line)"""
    if h.is_zero():
        raise DomainError("ray direction must be non-zero")
    t = 1.0
    for _ in range(max_doublings):
        if not sublevel_membership(y, d, x + h * t):
            return t
        t *= 2.0
    raise SolverError("ray did not leave the sublevel set")


def sublevel_boundary_time(y: LpVector, d: float, x: LpVector, h: LpVector) -> float:
    """
    The t > 0 where the ray x + t h crosses the boundary D_p = d of U_{y,d}

    Args:
        x: interior starting point, D_p(x, y) < d

    Raises:
        DomainError: x is not interior
    """
    if not divergence_Dp(x, y).value < d:
        raise DomainError("ray must start inside the sublevel set")
    upper = sublevel_exit_time(y, d, x, h)
    return float(optimize.brentq(
        lambda t: divergence_Dp(x + h * t, y).value - d, 0.0, upper, xtol=1e-14, rtol=1e-13
    ))
