"""
Divergence on L_p
D_p(x, y) = Psi_p(x) + Psi_q(y~) - Re<x, y~>, the scalar bound functions
f_p and g_p, and the cosine law / duality symmetry it satisfies
"""

from dataclasses import dataclass
from typing import Dict, Union

import numpy as np

from src.lp.embedding import duality_map
from src.lp.lp_space import (
    LpVector,
    conjugate_order,
    pairing,
    scaled_power_sum,
    schatten_norm,
    validate_order,
)
from src.lp.potential import potential
from src.utils.errors import DomainError

ArrayLike = Union[float, np.ndarray]


def scalar_bounds(t: ArrayLike, p: float) -> Dict[str, ArrayLike]:
    """
    f_p(t) = p + q t^p - pq t and g_p(t) = p + q t - pq t^{1/p}

    Args:
        t: value(s) >= 0
        p: order in (1, inf)

    Returns:
        dict: {"f": ..., "g": ...}
    """
    p = validate_order(p)
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0) or not np.all(np.isfinite(t_arr)):
        raise DomainError("scalar bounds need t >= 0")
    q = conjugate_order(p)
    f = p + q * t_arr ** p - p * q * t_arr
    g = p + q * t_arr - p * q * t_arr ** (1.0 / p)
    if np.ndim(t) == 0:
        return {"f": float(f), "g": float(g)}
    return {"f": f, "g": g}


@dataclass(frozen=True)
class DivergenceValue:
    """Divergence with its f_p / g_p lower bound and the pairing cross term"""

    value: float
    lower_bound: float
    cross_term: complex

    def to_dict(self) -> Dict:
        return {
            "value": self.value,
            "lower_bound": self.lower_bound,
            "cross_term": [self.cross_term.real, self.cross_term.imag],
        }


def divergence_Dp(x: LpVector, y: LpVector) -> DivergenceValue:
    """
    D_p(x, y) for x, y in the same L_p

    lower_bound = ||y/p||_p^p f_p(||x||_p / ||y||_p), taken as 0 when y = 0
    """
    x.check_same_space(y)
    y_tilde = duality_map(y)
    cross = pairing(x, y_tilde)
    value = potential(x) + potential(y_tilde) - cross.real
    norm_y = schatten_norm(y)
    if norm_y == 0.0:
        lower = 0.0
    else:
        ratio = schatten_norm(x) / norm_y
        lower = scaled_power_sum(y) * scalar_bounds(ratio, x.order)["f"]
    return DivergenceValue(float(value), float(lower), cross)


def duality_symmetry_residual(x: LpVector, y: LpVector) -> float:
    """|D_p(y, x) - D_q(x~, y~)|"""
    forward = divergence_Dp(y, x).value
    dual = divergence_Dp(duality_map(x), duality_map(y)).value
    return abs(forward - dual)


def cosine_residual(
    x: LpVector,
    y: LpVector,
    z: LpVector,
    include_symmetry: bool = False
) -> float:
    """
    |D(x,y) + D(y,z) - D(x,z) - Re<x - y, z~ - y~>|

    With include_symmetry the duality-symmetry residual of (x, y) is folded
    in through max().
    """
    x.check_same_space(y)
    x.check_same_space(z)
    law = (
        divergence_Dp(x, y).value
        + divergence_Dp(y, z).value
        - divergence_Dp(x, z).value
        - pairing(x - y, duality_map(z) - duality_map(y)).real
    )
    residual = abs(law)
    if include_symmetry:
        residual = max(residual, duality_symmetry_residual(x, y))
    return residual


def first_argument_convexity_gap(x1: LpVector, x2: LpVector, y: LpVector, t: float) -> float:
    """t D(x1,y) + (1-t) D(x2,y) - D(t x1 + (1-t) x2, y); >= 0"""
    mixed = x1 * t + x2 * (1.0 - t)
    return (
        t * divergence_Dp(x1, y).value
        + (1.0 - t) * divergence_Dp(x2, y).value
        - divergence_Dp(mixed, y).value
    )
