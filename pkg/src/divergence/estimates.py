"""
Divergence Estimates
Inequalities relating S_alpha across alpha, the |phi(a) - psi(a)| continuity
bound, joint convexity and the sphere convexity estimate
"""

from typing import Dict

from src.algebra.algebra import AlgebraElement, NormalFunctional, apply_functional, opnorm
from src.lp.embedding import alpha_embed, duality_map
from src.lp.lp_space import LpVector, conjugate_order, schatten_norm
from src.utils.errors import DomainError
from .alpha_divergence import alpha_divergence
from .divergence import divergence_Dp

SPHERE_TOL = 1e-8


def _require_positive(*functionals: NormalFunctional):
    for omega in functionals:
        if not omega.is_positive:
            raise DomainError("estimate requires positive functionals")


def _require_ordered(alpha: float, beta: float):
    if not -1.0 < alpha <= beta < 1.0:
        raise DomainError(f"need -1 < alpha <= beta < 1, got alpha={alpha}, beta={beta}")


def scaling_inequality_gap(
    phi: NormalFunctional,
    psi: NormalFunctional,
    alpha: float,
    beta: float
) -> Dict[str, float]:
    """
    gap1 = (1-alpha) S_alpha - (1-beta) S_beta and
    gap2 = (1+beta) S_beta - (1+alpha) S_alpha, both >= 0 for alpha <= beta
    """
    _require_ordered(alpha, beta)
    _require_positive(phi, psi)
    s_alpha = alpha_divergence(phi, psi, alpha).value
    s_beta = alpha_divergence(phi, psi, beta).value
    return {
        "gap1": (1.0 - alpha) * s_alpha - (1.0 - beta) * s_beta,
        "gap2": (1.0 + beta) * s_beta - (1.0 + alpha) * s_alpha,
    }


def divergence_neighbourhoods(
    phi: NormalFunctional,
    psi: NormalFunctional,
    alpha: float,
    beta: float,
    radius: float
) -> Dict:
    """
    Membership of phi in the S_alpha / S_beta balls around psi

    O^alpha(psi, d(1-beta)/(1-alpha)) <= O^beta(psi, d) <= O^alpha(psi, d(1+beta)/(1+alpha))
    """
    _require_ordered(alpha, beta)
    if radius <= 0:
        raise DomainError("neighbourhood radius must be positive")
    s_alpha = alpha_divergence(phi, psi, alpha).value
    s_beta = alpha_divergence(phi, psi, beta).value
    inner_radius = radius * (1.0 - beta) / (1.0 - alpha)
    outer_radius = radius * (1.0 + beta) / (1.0 + alpha)
    in_inner = s_alpha < inner_radius
    in_middle = s_beta < radius
    in_outer = s_alpha < outer_radius
    return {
        "s_alpha": s_alpha,
        "s_beta": s_beta,
        "inner_radius": inner_radius,
        "outer_radius": outer_radius,
        "in_inner": in_inner,
        "in_middle": in_middle,
        "in_outer": in_outer,
        "consistent": (not in_inner or in_middle) and (not in_middle or in_outer),
    }


def continuity_estimate(
    phi: NormalFunctional,
    psi: NormalFunctional,
    a: AlgebraElement,
    alpha: float
) -> Dict[str, float]:
    """
    |phi(a) - psi(a)| against
    1/2 ||a|| (||x+y||_p ||x~-y~||_q + ||x-y||_p ||x~+y~||_q)

    The same right-hand side divided by pq is also an upper bound
    (sharp_bound).
    """
    _require_positive(phi, psi)
    x, y = alpha_embed(phi, alpha), alpha_embed(psi, alpha)
    x_tilde, y_tilde = duality_map(x), duality_map(y)
    p = x.order
    q = conjugate_order(p)
    bound = 0.5 * opnorm(a) * (
        schatten_norm(x + y) * schatten_norm(x_tilde - y_tilde)
        + schatten_norm(x - y) * schatten_norm(x_tilde + y_tilde)
    )
    lhs = abs(apply_functional(phi, a) - apply_functional(psi, a))
    return {"lhs": float(lhs), "bound": float(bound), "sharp_bound": float(bound / (p * q))}


def joint_convexity_gap(
    phi_1: NormalFunctional,
    psi_1: NormalFunctional,
    phi_2: NormalFunctional,
    psi_2: NormalFunctional,
    alpha: float,
    t: float
) -> float:
    """t S(phi1,psi1) + (1-t) S(phi2,psi2) - S(mixtures); >= 0 on positives"""
    _require_positive(phi_1, psi_1, phi_2, psi_2)
    mixed = alpha_divergence(phi_1 * t + phi_2 * (1.0 - t), psi_1 * t + psi_2 * (1.0 - t), alpha)
    return (
        t * alpha_divergence(phi_1, psi_1, alpha).value
        + (1.0 - t) * alpha_divergence(phi_2, psi_2, alpha).value
        - mixed.value
    )


def on_sphere(x: LpVector, tol: float = SPHERE_TOL) -> bool:
    """||x||_p = p"""
    return abs(schatten_norm(x) - x.order) <= tol


def sphere_point(x: LpVector) -> LpVector:
    """Radial rescaling onto the radius-p sphere"""
    norm = schatten_norm(x)
    if norm == 0.0:
        raise DomainError("cannot rescale the zero vector onto the sphere")
    return x * (x.order / norm)


def sphere_convexity_gap(x: LpVector, y: LpVector) -> float:
    """||(x/p + y/p)/2||_p - |1 - D_p(x,y)/(2pq)| for sphere points; >= 0"""
    if not (on_sphere(x) and on_sphere(y)):
        raise DomainError("sphere convexity estimate needs ||x||_p = ||y||_p = p")
    p = x.order
    q = conjugate_order(p)
    midpoint = schatten_norm((x + y) * (0.5 / p))
    return midpoint - abs(1.0 - divergence_Dp(x, y).value / (2.0 * p * q))
