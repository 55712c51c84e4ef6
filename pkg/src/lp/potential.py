"""
Potential Functions
Psi_p(x) = q ||x/p||_p^p and its Legendre structure: the derivative of
Psi_p at x is pairing against x~, and Psi_q is the convex conjugate of Psi_p
"""

from .embedding import duality_map
from .lp_space import LpVector, conjugate_order, pairing, scaled_power_sum


def potential(x: LpVector) -> float:
    """Psi_p(x) = q ||x/p||_p^p, p = x.order"""
    return conjugate_order(x.order) * scaled_power_sum(x)


def legendre_residual(x: LpVector) -> float:
    """|Psi_q(x~) - (Re<x, x~> - Psi_p(x))|"""
    x_tilde = duality_map(x)
    return abs(potential(x_tilde) - (pairing(x, x_tilde).real - potential(x)))


def potential_directional_derivative(x: LpVector, y: LpVector) -> float:
    """D_y Psi_p(x) = Re<y, x~>"""
    x.check_same_space(y)
    return pairing(y, duality_map(x)).real


def finite_difference_derivative(x: LpVector, y: LpVector, h: float = 1e-5) -> float:
    """Central difference (Psi_p(x + h y) - Psi_p(x - h y)) / 2h"""
    x.check_same_space(y)
    return (potential(x + y * h) - potential(x - y * h)) / (2.0 * h)


def fenchel_young_gap(x_tilde: LpVector, y: LpVector) -> float:
    """
    Psi_q(x~) - (Re<y, x~> - Psi_p(y)); non-negative, zero when x~ is the
    dual of y
    """
    return potential(x_tilde) - (pairing(y, x_tilde).real - potential(y))


def convexity_gap(x: LpVector, y: LpVector, t: float) -> float:
    """t Psi(x) + (1-t) Psi(y) - Psi(t x + (1-t) y)"""
    return t * potential(x) + (1.0 - t) * potential(y) - potential(x * t + y * (1.0 - t))
