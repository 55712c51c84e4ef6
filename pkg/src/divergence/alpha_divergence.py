"""
Alpha-Divergence
S_alpha(phi, psi) = D_p(l_alpha(phi), l_alpha(psi)) on the predual, with
its Hellinger (alpha = 0) and unit-sphere specializations
"""

import numpy as np

from src.algebra.algebra import NormalFunctional, check_same_shape, polar_decompose
from src.algebra.matrix_functions import psd_power
from src.lp.embedding import alpha_embed, alpha_to_order
from src.lp.lp_space import conjugate_order, pairing
from src.utils.errors import DomainError
from .divergence import DivergenceValue, cosine_residual, scalar_bounds

UNIT_TOL = 1e-10


def alpha_divergence(
    omega_1: NormalFunctional,
    omega_2: NormalFunctional,
    alpha: float
) -> DivergenceValue:
    """
    Compute S_alpha(omega_1, omega_2)

    value = q ||omega_1||_1 + p ||omega_2||_1 - Re<l_alpha(omega_1), l_{-alpha}(omega_2)>
    where the pairing equals pq sum Tr(rho^{1/p} u* v nu^{1/q}).

    Args:
        omega_1: first functional (phi)
        omega_2: second functional (psi)
        alpha: in (-1, 1)

    Returns:
        DivergenceValue: value, g_p lower bound and cross term

    Example:
        diag(0.5, 0.5) vs diag(0.9, 0.1) at alpha = 0 -> ~0.4222912
    """
    check_same_shape(omega_1.shape, omega_2.shape)
    p = alpha_to_order(alpha)
    q = conjugate_order(p)
    cross = pairing(alpha_embed(omega_1, alpha), alpha_embed(omega_2, -alpha))
    norm_1, norm_2 = omega_1.norm_1, omega_2.norm_1
    value = q * norm_1 + p * norm_2 - cross.real
    if norm_2 == 0.0:
        lower = 0.0
    else:
        lower = norm_2 * scalar_bounds(norm_1 / norm_2, p)["g"]
    return DivergenceValue(float(value), float(lower), cross)


def pythagorean_residual(
    phi: NormalFunctional,
    psi: NormalFunctional,
    sigma: NormalFunctional,
    alpha: float
) -> float:
    """
    |S(phi,psi) + S(psi,sigma) - S(phi,sigma)
      - Re<l_a(phi) - l_a(psi), l_{-a}(sigma) - l_{-a}(psi)>|
    """
    return cosine_residual(
        alpha_embed(phi, alpha),
        alpha_embed(psi, alpha),
        alpha_embed(sigma, alpha),
    )


def hellinger_S0(omega_1: NormalFunctional, omega_2: NormalFunctional) -> float:
    """S_0 = 2 sum ||u rho^{1/2} - v nu^{1/2}||_F^2"""
    check_same_shape(omega_1.shape, omega_2.shape)
    first, second = polar_decompose(omega_1), polar_decompose(omega_2)
    total = 0.0
    for u, rho, v, nu in zip(first.u.blocks, first.rho.blocks, second.u.blocks, second.rho.blocks):
        diff = u @ psd_power(rho, 0.5) - v @ psd_power(nu, 0.5)
        total += float(np.sum(np.abs(diff) ** 2))
    return 2.0 * total


def sphere_divergence(omega_1: NormalFunctional, omega_2: NormalFunctional, alpha: float) -> float:
    """
    S_alpha restricted to unit-norm functionals: pq (1 - Re sum Tr(rho^{1/p} u* v nu^{1/q}))

    Raises:
        DomainError: if either functional is off the unit sphere
    """
    for omega in (omega_1, omega_2):
        if abs(omega.norm_1 - 1.0) > UNIT_TOL:
            raise DomainError(f"functional with norm {omega.norm_1:.12g} is not on the unit sphere")
    p = alpha_to_order(alpha)
    q = conjugate_order(p)
    cross = pairing(alpha_embed(omega_1, alpha), alpha_embed(omega_2, -alpha))
    return float(p * q - cross.real)


def symmetry_residual(omega_1: NormalFunctional, omega_2: NormalFunctional, alpha: float) -> float:
    """|S_alpha(phi, psi) - S_{-alpha}(psi, phi)|"""
    return abs(
        alpha_divergence(omega_1, omega_2, alpha).value
        - alpha_divergence(omega_2, omega_1, -alpha).value
    )


def classical_alpha_divergence(rho: np.ndarray, nu: np.ndarray, alpha: float) -> float:
    """Scalar formula q sum rho_i + p sum nu_i - pq sum rho_i^{1/p} nu_i^{1/q}"""
    p = alpha_to_order(alpha)
    q = conjugate_order(p)
    rho = np.asarray(rho, dtype=float)
    nu = np.asarray(nu, dtype=float)
    if np.any(rho < 0) or np.any(nu < 0):
        raise DomainError("classical alpha-divergence needs non-negative weights")
    return float(q * rho.sum() + p * nu.sum() - p * q * np.sum(rho ** (1.0 / p) * nu ** (1.0 / q)))
